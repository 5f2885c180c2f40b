#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebetti/graph.hpp"

namespace ebetti {

/// A two-valued weight system on the coordinate-pair arrangement in n
/// variables: pairs forming edges of the graph carry weight alpha, all other
/// pairs carry weight beta, with alpha > beta > 0 and n >= 5.
struct Instance {
    int n;
    int alpha;
    int beta;
    SimpleGraph graph;

    /// Validates the hypotheses (n >= 5, alpha > beta >= 1, non-empty graph);
    /// throws UnsupportedInstanceError otherwise.
    static Instance create(int n, int alpha, int beta, const std::vector<Edge>& edges);

    int weight(int i, int j) const { return graph.has_edge(i, j) ? alpha : beta; }
};

enum class CornerKind { H1, H2 };

/// One corner of the Betti diagram: the graded Betti number in homological
/// degree `column` and internal degree `degree` (so diagram row
/// `degree - column`).
struct Corner {
    int column;
    int degree;
    long long value;
    CornerKind kind;

    bool operator==(const Corner&) const = default;
};

/// The extremal Betti data of R/I: its diagram corners together with the top
/// non-vanishing local cohomology degrees a1 (H^1, absent when it vanishes
/// identically) and a2 (H^2).
struct ExtremalReport {
    std::vector<Corner> corners;  // sorted by column, descending
    std::optional<int> a1;
    int a2 = 0;
    bool cohen_macaulay = false;
    bool pseudo_gorenstein = false;

    bool operator==(const ExtremalReport&) const = default;
};

std::string to_string(const ExtremalReport& report);

}  // namespace ebetti
