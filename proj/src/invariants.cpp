#include "ebetti/invariants.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "ebetti/errors.hpp"

namespace ebetti {

namespace {

bool edges_disjoint(Edge e1, Edge e2) {
    return e1.first != e2.first && e1.first != e2.second && e1.second != e2.first &&
           e1.second != e2.second;
}

// Apex of a triangle-with-whisker on 4 vertices: the unique vertex adjacent
// to the other three within the induced subgraph.
int whisker_apex(const SimpleGraph& g, const std::array<int, 4>& verts) {
    for (int cand : verts) {
        int deg = 0;
        for (int other : verts) {
            if (other != cand && g.has_edge(cand, other)) ++deg;
        }
        if (deg == 3) return cand;
    }
    throw Error("no apex in a subgraph expected to be a whiskered triangle");
}

}  // namespace

PairClass classify_pair(const SimpleGraph& g, Edge e1, Edge e2) {
    if (!g.has_edge(e1.first, e1.second) || !g.has_edge(e2.first, e2.second)) {
        throw EdgeAbsentError("classify_pair requires two edges of the graph");
    }
    if (!edges_disjoint(e1, e2)) {
        throw NotDisjointError("classify_pair requires vertex-disjoint edges");
    }
    auto [i, j] = e1;
    auto [p, q] = e2;
    const bool ip = g.has_edge(i, p), iq = g.has_edge(i, q);
    const bool jp = g.has_edge(j, p), jq = g.has_edge(j, q);
    if ((ip && jq) || (iq && jp)) return PairClass::FourCycleBound;
    const int cross = int(ip) + int(iq) + int(jp) + int(jq);
    switch (cross) {
        case 0:
            return PairClass::Disconnected;
        case 1:
            return PairClass::Path3;
        case 2:
            return PairClass::TriangleWhisker;
        default:
            // three or four cross edges always contain a parallel pair
            throw Error("unreachable pair configuration");
    }
}

PairCounts pair_counts(const SimpleGraph& g) {
    PairCounts counts;
    const auto& edges = g.edges();
    for (size_t x = 0; x < edges.size(); ++x) {
        for (size_t y = x + 1; y < edges.size(); ++y) {
            if (!edges_disjoint(edges[x], edges[y])) continue;
            switch (classify_pair(g, edges[x], edges[y])) {
                case PairClass::Disconnected:
                    ++counts.p0;
                    break;
                case PairClass::Path3:
                    ++counts.p1;
                    break;
                case PairClass::TriangleWhisker:
                    ++counts.p2;
                    break;
                case PairClass::FourCycleBound:
                    ++counts.bound4;
                    break;
            }
        }
    }
    return counts;
}

long long a_invariant(const SimpleGraph& g) {
    const int n = g.universe_size();
    long long total = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (g.has_edge(i, j)) continue;
            const auto& a = g.neighbors(i);
            const auto& b = g.neighbors(j);
            size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] < b[y]) {
                    ++x;
                } else if (a[x] > b[y]) {
                    ++y;
                } else {
                    ++total;
                    ++x;
                    ++y;
                }
            }
        }
    }
    return total;
}

long long b_invariant(const SimpleGraph& g) {
    long long total = 0;
    for (auto [p, q] : g.edges()) {
        for (int v : g.support()) {
            if (!g.has_edge(v, p) && !g.has_edge(v, q)) ++total;
        }
    }
    return total;
}

long long s_invariant(const SimpleGraph& g, IsolatedVertexRule rule) {
    const int n = g.universe_size();
    if (n < 5) {
        throw UnsupportedInstanceError("s invariant requires a universe of size >= 5");
    }
    long long count = 0;
    std::vector<int> w = {1, 2, 3, 4, 5};
    while (true) {
        SimpleGraph sub = g.induced_subgraph(w);
        int components = sub.component_count();
        if (rule == IsolatedVertexRule::CountAsComponents) {
            components += 5 - sub.support_size();
        }
        if (components >= 2) ++count;

        // next 5-combination of [1..n]
        int k = 4;
        while (k >= 0 && w[k] == n - 4 + k) --k;
        if (k < 0) break;
        ++w[k];
        for (int t = k + 1; t < 5; ++t) w[t] = w[t - 1] + 1;
    }
    return count;
}

ExtensionCounts whisker_extension_counts(const SimpleGraph& g) {
    ExtensionCounts counts;
    const int n = g.universe_size();
    const auto& edges = g.edges();
    std::set<std::array<int, 5>> seen;
    for (size_t x = 0; x < edges.size(); ++x) {
        for (size_t y = x + 1; y < edges.size(); ++y) {
            if (!edges_disjoint(edges[x], edges[y])) continue;
            if (classify_pair(g, edges[x], edges[y]) != PairClass::TriangleWhisker) continue;
            std::array<int, 4> verts = {edges[x].first, edges[x].second, edges[y].first,
                                        edges[y].second};
            const int apex = whisker_apex(g, verts);
            std::array<int, 3> others{};
            int idx = 0;
            for (int v : verts) {
                if (v != apex) others[idx++] = v;
            }
            for (int t = 1; t <= n; ++t) {
                if (t == verts[0] || t == verts[1] || t == verts[2] || t == verts[3]) continue;
                if (g.has_edge(t, others[0]) && g.has_edge(t, others[1]) &&
                    g.has_edge(t, others[2])) {
                    ++counts.combinations;
                    std::array<int, 5> subset = {verts[0], verts[1], verts[2], verts[3], t};
                    std::sort(subset.begin(), subset.end());
                    seen.insert(subset);
                }
            }
        }
    }
    counts.subsets = static_cast<long long>(seen.size());
    return counts;
}

long long f_invariant(const SimpleGraph& g, ExtensionCountRule rule) {
    ExtensionCounts counts = whisker_extension_counts(g);
    return rule == ExtensionCountRule::DistinctSubsets ? counts.subsets : counts.combinations;
}

Rational Rational::make(long long num, long long den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

long long Rational::as_integer() const {
    if (den != 1) {
        throw Error("expected an integer value, got " + std::to_string(num) + "/" +
                    std::to_string(den));
    }
    return num;
}

Rational r_invariant(const SimpleGraph& g) {
    const int n = g.universe_size();
    long long six_times = 0;
    for (auto [p, q] : g.edges()) {
        for (int i : g.support()) {
            if (g.has_edge(i, p) || g.has_edge(i, q)) continue;
            // i ranges over V(G) \ (N(p) ∪ N(q)); p, q themselves are excluded
            // since each neighbors the other.
            long long common = 0, exclusive = 0, outside = 0;
            for (int x = 1; x <= n; ++x) {
                const bool xp = g.has_edge(x, p);
                const bool xq = g.has_edge(x, q);
                const bool xi = g.has_edge(x, i);
                if (xp && xq && !xi) ++common;
                const bool in_p_only = xp && !xq && x != q;
                const bool in_q_only = xq && !xp && x != p;
                if ((in_p_only || in_q_only) && !xi) ++exclusive;
                if (!xp && !xq && !xi && x != i) ++outside;
            }
            six_times += 2 * common + 3 * exclusive + 6 * outside;
        }
    }
    return Rational::make(six_times, 6);
}

Conditions structural_conditions(const SimpleGraph& g) {
    const int n = g.universe_size();
    Conditions cond;
    const PairCounts counts = pair_counts(g);
    cond.g1 = counts.p0 + counts.p1 + counts.p2 > 0;
    cond.g3 = counts.p0 == 0 && counts.p1 == 0;
    cond.g4 = whisker_extension_counts(g).combinations ==
              static_cast<long long>(n - 4) * counts.p2;

    for (int i = 1; i <= n && !cond.g2; ++i) {
        for (int j = i + 1; j <= n && !cond.g2; ++j) {
            if (g.has_edge(i, j)) continue;
            auto augmented = g.edges();
            augmented.emplace_back(i, j);
            if (SimpleGraph(n, augmented).component_count() >= 2) cond.g2 = true;
        }
    }

    cond.g5 = true;
    for (int i = 1; i <= n && cond.g5; ++i) {
        for (int j = i + 1; j <= n && cond.g5; ++j) {
            if (g.has_edge(i, j)) continue;
            for (int t = 1; t <= n && cond.g5; ++t) {
                if (t == i || t == j) continue;
                auto augmented = g.edges();
                augmented.emplace_back(i, j);
                augmented.emplace_back(std::min(i, t), std::max(i, t));
                augmented.emplace_back(std::min(j, t), std::max(j, t));
                if (SimpleGraph(n, augmented).component_count() >= 2) cond.g5 = false;
            }
        }
    }
    return cond;
}

InvariantBundle compute_invariants(const SimpleGraph& g) {
    if (g.universe_size() < 5) {
        throw UnsupportedInstanceError("invariant bundle requires a universe of size >= 5");
    }
    InvariantBundle inv;
    const PairCounts counts = pair_counts(g);
    inv.p0 = counts.p0;
    inv.p1 = counts.p1;
    inv.p2 = counts.p2;
    inv.bound4 = counts.bound4;
    inv.a = a_invariant(g);
    inv.b = b_invariant(g);
    inv.s = s_invariant(g);
    inv.f = f_invariant(g);
    inv.r = r_invariant(g);
    inv.c3 = g.triangle_count();
    inv.c4 = g.four_cycle_count();
    inv.girth = g.girth();
    inv.num_vertices = g.support_size();
    inv.num_edges = g.edge_count();
    inv.sum_deg_choose2 = g.sum_degree_choose_2();
    inv.max_degree = g.max_degree();
    const Conditions cond = structural_conditions(g);
    inv.g1 = cond.g1;
    inv.g2 = cond.g2;
    inv.g3 = cond.g3;
    inv.g4 = cond.g4;
    inv.g5 = cond.g5;
    return inv;
}

}  // namespace ebetti
