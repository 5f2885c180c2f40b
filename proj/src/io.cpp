#include "ebetti/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ebetti/errors.hpp"

namespace ebetti {

namespace {

using nlohmann::json;

Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    for (const char* key : {"n", "alpha", "beta", "edges"}) {
        if (!doc.contains(key)) {
            throw ParseError(std::string("instance document missing field \"") + key + "\"");
        }
    }
    if (!doc["n"].is_number_integer() || !doc["alpha"].is_number_integer() ||
        !doc["beta"].is_number_integer()) {
        throw ParseError("fields n, alpha, beta must be integers");
    }
    if (!doc["edges"].is_array()) throw ParseError("field \"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            throw ParseError("each edge must be a 2-element integer array");
        }
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return Instance::create(doc["n"].get<int>(), doc["alpha"].get<int>(),
                            doc["beta"].get<int>(), edges);
}

Instance instance_from_text(const std::string& content) {
    std::istringstream in(content);
    int n, alpha, beta;
    if (!(in >> n >> alpha >> beta)) {
        throw ParseError("text instance must start with: n alpha beta");
    }
    std::vector<Edge> edges;
    int i, j;
    while (in >> i) {
        if (!(in >> j)) throw ParseError("text instance has an unpaired edge endpoint");
        edges.emplace_back(i, j);
    }
    if (!in.eof()) throw ParseError("text instance contains a non-integer token");
    return Instance::create(n, alpha, beta, edges);
}

json corners_to_json(const ExtremalReport& report) {
    json corners = json::array();
    for (const Corner& corner : report.corners) {
        corners.push_back({{"i", corner.column}, {"j", corner.degree}, {"value", corner.value}});
    }
    return corners;
}

json report_fields(const ExtremalReport& report) {
    json doc;
    doc["corners"] = corners_to_json(report);
    doc["a1"] = report.a1 ? json(*report.a1) : json(nullptr);
    doc["a2"] = report.a2;
    doc["cohen_macaulay"] = report.cohen_macaulay;
    doc["pseudo_gorenstein"] = report.pseudo_gorenstein;
    return doc;
}

json invariants_fields(const InvariantBundle& inv) {
    json doc;
    doc["p0"] = inv.p0;
    doc["p1"] = inv.p1;
    doc["p2"] = inv.p2;
    doc["four_cycle_bound_pairs"] = inv.bound4;
    doc["a"] = inv.a;
    doc["b"] = inv.b;
    doc["s"] = inv.s;
    doc["f"] = inv.f;
    doc["r"] = {{"numerator", inv.r.num}, {"denominator", inv.r.den}};
    doc["c3"] = inv.c3;
    doc["c4"] = inv.c4;
    doc["girth"] = inv.girth ? json(*inv.girth) : json(nullptr);
    doc["num_vertices"] = inv.num_vertices;
    doc["num_edges"] = inv.num_edges;
    doc["sum_deg_choose2"] = inv.sum_deg_choose2;
    doc["max_degree"] = inv.max_degree;
    doc["g1"] = inv.g1;
    doc["g2"] = inv.g2;
    doc["g3"] = inv.g3;
    doc["g4"] = inv.g4;
    doc["g5"] = inv.g5;
    return doc;
}

}  // namespace

Instance parse_instance(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty instance document");
    if (content[first] == '{') {
        json doc;
        try {
            doc = json::parse(content);
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return instance_from_json(doc);
    }
    return instance_from_text(content);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string instance_to_json(const Instance& inst) {
    json edges = json::array();
    for (auto [i, j] : inst.graph.edges()) edges.push_back({i, j});
    const json doc = {
        {"n", inst.n}, {"alpha", inst.alpha}, {"beta", inst.beta}, {"edges", edges}};
    return doc.dump();
}

std::string report_to_json(const ReportDocument& doc) {
    json out = report_fields(doc.report);
    out["engine"] = doc.engine;
    out["invariants"] = invariants_fields(doc.invariants);
    if (doc.oracle_report) out["oracle"] = report_fields(*doc.oracle_report);
    if (doc.agreement) out["agreement"] = *doc.agreement;
    return out.dump(2);
}

std::string invariants_to_json(const Instance& inst, const InvariantBundle& inv) {
    json out = {{"n", inst.n}, {"alpha", inst.alpha}, {"beta", inst.beta}};
    out["invariants"] = invariants_fields(inv);
    return out.dump(2);
}

}  // namespace ebetti
