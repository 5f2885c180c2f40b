#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace ebetti {

/// Unordered edge, stored normalized as (min, max). Vertices are 1-indexed.
using Edge = std::pair<int, int>;

/// Simple graph on the vertex universe {1, ..., n}.
///
/// Edges are deduplicated and normalized on construction. The support V(G)
/// is the set of edge endpoints; universe vertices touched by no edge are
/// never treated as part of the graph, so "connected"/"disconnected" always
/// refers to the support.
class SimpleGraph {
public:
    SimpleGraph(int n, const std::vector<Edge>& edges);

    int universe_size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int i, int j) const;

    const std::vector<int>& neighbors(int i) const;  // N(i), sorted
    int degree(int i) const;
    int max_degree() const { return max_degree_; }

    const std::vector<int>& support() const { return support_; }  // V(G), sorted
    int support_size() const { return static_cast<int>(support_.size()); }
    bool in_support(int i) const;

    /// Edges of G with both endpoints in w, on the same universe.
    SimpleGraph induced_subgraph(const std::vector<int>& w) const;

    /// Number of connected components of the support; 0 for the edgeless graph.
    int component_count() const;

    /// Length of a shortest cycle; std::nullopt when acyclic.
    std::optional<int> girth() const;

    long long triangle_count() const;    // vertex-distinct 3-cycles
    long long four_cycle_count() const;  // vertex-distinct 4-cycles
    long long sum_degree_choose_2() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // size n_+1, adj_[0] unused
    std::vector<int> support_;
};

long long binomial(long long n, long long k);

}  // namespace ebetti
