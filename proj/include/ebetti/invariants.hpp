#pragma once

#include <optional>

#include "ebetti/graph.hpp"

namespace ebetti {

/// Classification of a vertex-disjoint pair of edges by the subgraph induced
/// on its four endpoints.
enum class PairClass {
    Disconnected,     // the two edges only
    Path3,            // a path with 3 edges
    TriangleWhisker,  // a triangle with a pendant edge
    FourCycleBound,   // the pair lies in a 4-cycle
};

PairClass classify_pair(const SimpleGraph& g, Edge e1, Edge e2);

struct PairCounts {
    long long p0 = 0;      // disconnected pairs
    long long p1 = 0;      // 3-edge-path pairs
    long long p2 = 0;      // triangle-with-whisker pairs
    long long bound4 = 0;  // pairs contained in a 4-cycle
};

PairCounts pair_counts(const SimpleGraph& g);

/// Sum over non-adjacent vertex pairs {i,j} of |N(i) ∩ N(j)|.
long long a_invariant(const SimpleGraph& g);

/// Sum over edges pq of |V(G) \ (N(p) ∪ N(q))|.
long long b_invariant(const SimpleGraph& g);

/// Whether vertices of W untouched by G[W]'s edges count as components when
/// deciding if G[W] is disconnected. The shipped convention is Ignore: a
/// subgraph is judged on its support, so the edgeless subgraph is never
/// disconnected. CountAsComponents is kept for the cross-validation sweep
/// that pinned the convention.
enum class IsolatedVertexRule { Ignore, CountAsComponents };

/// Number of 5-element subsets W of the universe with G[W] disconnected.
long long s_invariant(const SimpleGraph& g,
                      IsolatedVertexRule rule = IsolatedVertexRule::Ignore);

/// How to count whisker-pair extensions: by distinct 5-vertex subsets, or by
/// raw (pair, extra vertex) combinations. DistinctSubsets is the shipped
/// convention; one 5-subset can host two extendable whisker pairs.
enum class ExtensionCountRule { DistinctSubsets, PairVertexCombinations };

/// Both extension counts in one pass over the triangle-with-whisker pairs.
struct ExtensionCounts {
    long long combinations = 0;  // (pair, t) with t adjacent to the 3 non-apex vertices
    long long subsets = 0;       // distinct such 5-vertex subsets
};

ExtensionCounts whisker_extension_counts(const SimpleGraph& g);

long long f_invariant(const SimpleGraph& g,
                      ExtensionCountRule rule = ExtensionCountRule::DistinctSubsets);

/// Exact rational, reduced, nonnegative denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    bool is_integer() const { return den == 1; }
    long long as_integer() const;  // throws Error when not integral
    bool operator==(const Rational&) const = default;
};

/// Weighted count over (edge pq, vertex i of V(G) outside N(p) ∪ N(q)) with
/// coefficients 1/3, 1/2, 1 on three neighborhood-difference terms.
Rational r_invariant(const SimpleGraph& g);

/// Structural conditions driving the dispatch tables. All are properties of
/// the graph alone; connectivity is judged on the support.
struct Conditions {
    bool g1 = false;  // some disjoint edge pair lies in no 4-cycle
    bool g2 = false;  // some non-edge, when added, leaves the graph disconnected
    bool g3 = false;  // every disjoint pair outside 4-cycles induces a whiskered triangle
    bool g4 = false;  // every (whisker pair, outside vertex) has the 3-fan extension
    bool g5 = false;  // adding any triangle through a non-edge keeps the graph connected
};

Conditions structural_conditions(const SimpleGraph& g);

/// Everything the closed forms consume, computed once per graph.
struct InvariantBundle {
    long long p0 = 0, p1 = 0, p2 = 0, bound4 = 0;
    long long a = 0, b = 0, s = 0, f = 0;
    Rational r;
    long long c3 = 0, c4 = 0;
    std::optional<int> girth;
    int num_vertices = 0;  // |V(G)|
    int num_edges = 0;
    long long sum_deg_choose2 = 0;
    int max_degree = 0;
    bool g1 = false, g2 = false, g3 = false, g4 = false, g5 = false;
};

/// Requires a universe of size >= 5.
InvariantBundle compute_invariants(const SimpleGraph& g);

}  // namespace ebetti
