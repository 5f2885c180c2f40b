#include "ebetti/instance.hpp"

#include <sstream>

#include "ebetti/errors.hpp"

namespace ebetti {

Instance Instance::create(int n, int alpha, int beta, const std::vector<Edge>& edges) {
    if (n < 5) {
        throw UnsupportedInstanceError("instances require n >= 5, got n=" + std::to_string(n));
    }
    if (beta < 1 || alpha <= beta) {
        throw UnsupportedInstanceError("instances require alpha > beta >= 1, got alpha=" +
                                       std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
    SimpleGraph graph(n, edges);
    if (graph.edge_count() == 0) {
        throw UnsupportedInstanceError("instances require a non-empty graph");
    }
    return Instance{n, alpha, beta, std::move(graph)};
}

std::string to_string(const ExtremalReport& report) {
    std::ostringstream out;
    out << "corners{";
    for (size_t k = 0; k < report.corners.size(); ++k) {
        const auto& c = report.corners[k];
        if (k > 0) out << ", ";
        out << "(" << c.column << "," << c.degree << ")=" << c.value;
    }
    out << "} a1=";
    if (report.a1) {
        out << *report.a1;
    } else {
        out << "-inf";
    }
    out << " a2=" << report.a2 << (report.cohen_macaulay ? " CM" : "")
        << (report.pseudo_gorenstein ? " pG" : "");
    return out.str();
}

}  // namespace ebetti
