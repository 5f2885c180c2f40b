// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 2-3 are the cross-validation sweeps and dominate the
// runtime (a few minutes single-threaded).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "ebetti/closed_form.hpp"
#include "ebetti/errors.hpp"
#include "ebetti/invariants.hpp"
#include "ebetti/lattice.hpp"
#include "ebetti/local_cohomology.hpp"
#include "ebetti/sweep.hpp"

using namespace ebetti;

namespace {

const std::vector<Edge> kExampleEdges = {{1, 2}, {1, 3}, {2, 3}, {2, 4},
                                         {3, 4}, {4, 5}, {5, 6}, {6, 7}};

int hw_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

using CriterionFn = std::function<void(Checker&)>;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

void criterion1_golden_example(Checker& c) {
    const SimpleGraph graph(8, kExampleEdges);
    const InvariantBundle inv = compute_invariants(graph);
    c.require(inv.p0 == 8, "p0 != 8");
    c.require(inv.p1 == 5, "p1 != 5");
    c.require(inv.p2 == 1, "p2 != 1");
    c.require(inv.b == 22, "b != 22");
    c.require(inv.c3 == 2, "c3 != 2");

    const auto start = std::chrono::steady_clock::now();
    const auto corners_at = [&](int alpha, int beta) {
        return dispatch(Instance::create(8, alpha, beta, kExampleEdges), inv);
    };
    const struct {
        int alpha, beta, j;
        long long value;
    } expected[] = {
        {8, 3, 22, 376}, {8, 7, 21, 32}, {7, 5, 20, 51}, {4, 2, 14, 37}, {8, 6, 22, 37},
    };
    for (const auto& e : expected) {
        const ExtremalReport report = corners_at(e.alpha, e.beta);
        c.require(report.corners.size() == 2,
                  "corner count at (" + std::to_string(e.alpha) + "," + std::to_string(e.beta) + ")");
        bool top_ok = false, c3_ok = false;
        for (const Corner& corner : report.corners) {
            if (corner.column == 7 && corner.degree == e.j && corner.value == e.value) top_ok = true;
            if (corner.column == 6 && corner.value == 2) c3_ok = true;
        }
        c.require(top_ok, "column-7 corner at (" + std::to_string(e.alpha) + "," +
                              std::to_string(e.beta) + ") is not (7," + std::to_string(e.j) +
                              ")=" + std::to_string(e.value));
        c.require(c3_ok, "column-6 corner value != 2 at (" + std::to_string(e.alpha) + "," +
                             std::to_string(e.beta) + ")");
    }
    const double closed_form_seconds = seconds_since(start);
    c.require(closed_form_seconds < 1.0, "closed form exceeded 1 s");

    // the (8,6) column is pinned by the homology engine: H^1 vanishes in
    // degree 15 and has dimension 37 in degree 14
    const Instance inst86 = Instance::create(8, 8, 6, kExampleEdges);
    c.require(local_cohomology_dim(inst86, 1, 15, hw_threads()) == 0,
              "(8,6) H^1 nonzero in degree 15");
    c.require(local_cohomology_dim(inst86, 1, 14, hw_threads()) == 37,
              "(8,6) H^1 in degree 14 != 37");
}

void criterion2_exhaustive_n5(Checker& c) {
    SweepOptions options;
    options.n = 5;
    options.alpha_max = 6;
    options.exhaustive = true;
    options.threads = hw_threads();
    const auto start = std::chrono::steady_clock::now();
    const SweepResult result = run_sweep(options);
    const double elapsed = seconds_since(start);
    c.require(result.graphs == 1023, "expected 1023 graphs");
    c.require(result.instances == 1023 * 15, "expected 15345 instances");
    for (size_t k = 0; k < result.mismatches.size() && k < 3; ++k) {
        c.require(false, "mismatch alpha=" + std::to_string(result.mismatches[k].alpha) +
                             " beta=" + std::to_string(result.mismatches[k].beta) + ": " +
                             result.mismatches[k].detail);
    }
    c.require(result.clean(), "sweep found mismatches");
    c.require(elapsed < 600.0, "exhaustive sweep exceeded 10 minutes");
    c.detail << (c.detail.str().empty() ? "" : "; ") << result.instances << " instances in "
             << static_cast<int>(elapsed) << " s";
}

void criterion3_randomized(Checker& c) {
    // the weight pool must cover all four parity classes and the special
    // families
    const auto pool = curated_weight_pairs(8);
    bool oe = false, oo = false, ee = false, eo = false;
    bool adjacent = false, gap2 = false, four_two = false, gap3 = false, doubled = false;
    for (auto [alpha, beta] : pool) {
        const bool ao = alpha % 2 != 0, bo = beta % 2 != 0;
        oe |= ao && !bo;
        oo |= ao && bo;
        ee |= !ao && !bo;
        eo |= !ao && bo;
        adjacent |= alpha == beta + 1;
        gap2 |= alpha == beta + 2;
        four_two |= alpha == 4 && beta == 2;
        gap3 |= alpha >= beta + 3;
        doubled |= alpha >= 2 * beta;
    }
    c.require(oe && oo && ee && eo, "weight pool misses a parity class");
    c.require(adjacent && gap2 && four_two && gap3 && doubled,
              "weight pool misses a special family");

    for (int n : {6, 7}) {
        SweepOptions options;
        options.n = n;
        options.alpha_max = 8;
        options.exhaustive = false;
        options.seed = 20240817;
        options.count = 500;
        options.threads = hw_threads();
        const auto start = std::chrono::steady_clock::now();
        const SweepResult result = run_sweep(options);
        const double elapsed = seconds_since(start);
        c.require(result.graphs == 500, "expected 500 graphs at n=" + std::to_string(n));
        for (size_t k = 0; k < result.mismatches.size() && k < 3; ++k) {
            c.require(false, "n=" + std::to_string(n) + " mismatch alpha=" +
                                 std::to_string(result.mismatches[k].alpha) + " beta=" +
                                 std::to_string(result.mismatches[k].beta) + ": " +
                                 result.mismatches[k].detail);
        }
        c.require(result.clean(), "sweep found mismatches at n=" + std::to_string(n));
        c.detail << (c.detail.str().empty() ? "" : "; ") << "n=" << n << ": "
                 << result.instances << " instances in " << static_cast<int>(elapsed) << " s";
    }
}

void criterion4_lattice(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    for (int alpha = 2; alpha <= 40; ++alpha) {
        for (int beta = 1; beta < alpha; ++beta) {
            if (sol1_closed(alpha, beta) != sol1_brute(alpha, beta)) {
                c.require(false, "box 1 mismatch at (" + std::to_string(alpha) + "," +
                                     std::to_string(beta) + ")");
                return;
            }
        }
    }
    for (int beta = 2; beta <= 38; ++beta) {
        for (int alpha = beta + 2; alpha <= 40; ++alpha) {
            if (sol2_closed(alpha, beta) != sol2_brute(alpha, beta)) {
                c.require(false, "box 2 mismatch at (" + std::to_string(alpha) + "," +
                                     std::to_string(beta) + ")");
                return;
            }
        }
    }
    c.require(seconds_since(start) < 1.0, "lattice checks exceeded 1 s");
}

void criterion5_remark_equivalence(Checker& c) {
    const auto check_graph = [&](int n, std::uint64_t mask) {
        const SimpleGraph g(n, edges_from_mask(n, mask));
        const PairCounts counts = pair_counts(g);
        const Conditions cond = structural_conditions(g);
        const bool free_pair = counts.p0 + counts.p1 + counts.p2 > 0;
        if (cond.g1 != free_pair || free_pair != (b_invariant(g) > 0)) {
            c.require(false, "equivalence fails on n=" + std::to_string(n) + " mask " +
                                 std::to_string(mask));
        }
    };
    for (std::uint64_t mask = 1; mask < (1u << 10); ++mask) check_graph(5, mask);
    for (int n : {6, 7}) {
        for (std::uint64_t mask : random_graph_masks(n, 20240817, 500)) check_graph(n, mask);
    }
}

void criterion6_degree_bounds(Checker& c) {
    // Direct checks one degree above each proven vanishing bound. The same
    // assertions run inside every oracle profile of criteria 2-3; a
    // violation there would have failed those sweeps with an engine error.
    long long profiles = 0;
    const auto check = [&](const Instance& inst) {
        ++profiles;
        if (local_cohomology_dim(inst, 1, 2 * inst.alpha - 1) != 0) {
            c.require(false, "H^1 alive above 2*alpha-2 for alpha=" + std::to_string(inst.alpha));
        }
        if (local_cohomology_dim(inst, 2, 3 * inst.alpha - 2) != 0) {
            c.require(false, "H^2 alive above 3*alpha-3 for alpha=" + std::to_string(inst.alpha));
        }
    };
    for (std::uint64_t mask = 1; mask < (1u << 10); ++mask) {
        const SimpleGraph g(5, edges_from_mask(5, mask));
        for (auto [alpha, beta] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {6, 1}}) {
            check(Instance{5, alpha, beta, g});
        }
    }
    for (std::uint64_t mask : random_graph_masks(6, 7, 60)) {
        const SimpleGraph g(6, edges_from_mask(6, mask));
        check(Instance{6, 6, 4, g});
        check(Instance{6, 7, 3, g});
    }
    c.detail << profiles << " bound checks";
}

void criterion7_pseudo_gorenstein(Checker& c) {
    // classifier == oracle over the exhaustive n=5 corpus
    long long positives = 0;
    for (std::uint64_t mask = 1; mask < (1u << 10); ++mask) {
        const SimpleGraph g(5, edges_from_mask(5, mask));
        const InvariantBundle inv = compute_invariants(g);
        for (int alpha = 2; alpha <= 6; ++alpha) {
            for (int beta = 1; beta < alpha; ++beta) {
                const Instance inst{5, alpha, beta, g};
                const ExtremalReport oracle = extremal_report_oracle(inst);
                const bool expected = oracle.cohen_macaulay && oracle.corners[0].value == 1;
                if (pseudo_gorenstein_clause(inst, inv).has_value() != expected) {
                    c.require(false, "classifier disagrees at alpha=" + std::to_string(alpha) +
                                         " beta=" + std::to_string(beta));
                    return;
                }
                if (expected) ++positives;
            }
        }
    }
    c.require(positives > 0, "no pseudo-Gorenstein instances found");
    c.detail << positives << " positive instances";

    // every clause has a positive witness, confirmed by the oracle
    using Clause = PseudoGorensteinClause;
    const struct {
        Clause clause;
        int n, alpha, beta;
        std::vector<Edge> edges;
    } witnesses[] = {
        {Clause::MinWeightsUniqueDegree2, 6, 2, 1, {{1, 2}, {1, 3}, {4, 5}}},
        {Clause::MinWeightsUniqueTriangle, 5, 2, 1, {{1, 2}, {1, 3}, {2, 3}}},
        {Clause::FourThreeUniqueTriangle, 5, 4, 3, {{1, 2}, {1, 3}, {2, 3}}},
        {Clause::AdjacentWeightsUniqueTriangle, 5, 5, 4, {{1, 2}, {1, 3}, {2, 3}}},
        {Clause::AdjacentWeightsStar, 5, 3, 2, {{1, 2}, {1, 3}}},
        {Clause::FourTwoSmall, 5, 4, 2, {{1, 2}, {1, 3}, {2, 3}}},
    };
    for (const auto& w : witnesses) {
        const Instance inst = Instance::create(w.n, w.alpha, w.beta, w.edges);
        const auto clause = pseudo_gorenstein_clause(inst);
        c.require(clause == w.clause, "witness classified under the wrong clause");
        const ExtremalReport oracle = extremal_report_oracle(inst);
        c.require(oracle.pseudo_gorenstein, "oracle rejects a clause witness");
    }
}

void criterion8_documented_conventions(Checker& c) {
    // s(G): judged on the subgraph support; the triangle on n=5 at (4,3) is
    // the separating case (Cohen-Macaulay exactly under this convention)
    const SimpleGraph triangle(5, {{1, 2}, {1, 3}, {2, 3}});
    c.require(s_invariant(triangle) == 0, "default s convention changed");
    c.require(s_invariant(triangle, IsolatedVertexRule::CountAsComponents) == 1,
              "alternative s convention changed");
    const CohomologyProfile profile =
        cohomology_profile(Instance::create(5, 4, 3, {{1, 2}, {1, 3}, {2, 3}}));
    c.require(!profile.a1.has_value(),
              "triangle at (4,3) is not Cohen-Macaulay; s convention wrong");

    // f(G): distinct 5-subsets; the 3-fan extension graph is the separating
    // case at (6,4), where the column-4 corner value is (n-4)p2 - f = 1
    const std::vector<Edge> fan = {{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 5}, {3, 5}, {4, 5}};
    const SimpleGraph fan_graph(5, fan);
    c.require(f_invariant(fan_graph) == 1, "default f convention changed");
    c.require(f_invariant(fan_graph, ExtensionCountRule::PairVertexCombinations) == 2,
              "alternative f convention changed");
    const Instance fan_inst = Instance::create(5, 6, 4, fan);
    c.require(local_cohomology_dim(fan_inst, 1, 9) == 1,
              "fan instance H^1 dimension at degree 9 != 1; f convention wrong");
    c.require(dispatch(fan_inst) == extremal_report_oracle(fan_inst),
              "fan instance engines disagree");
    c.detail << "s: support components; f: distinct 5-subsets";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, CriterionFn>> criteria = {
        {"golden example invariants and corners (exact, closed form < 1 s)",
         criterion1_golden_example},
        {"exhaustive oracle equivalence, n=5, alpha <= 6 (zero tolerance)",
         criterion2_exhaustive_n5},
        {"randomized oracle equivalence, n=6 and n=7, 500 graphs each, alpha <= 8",
         criterion3_randomized},
        {"lattice counts: closed forms equal brute force up to alpha = 40 (< 1 s)",
         criterion4_lattice},
        {"free-pair condition equivalent to positive pair counts and to b(G) > 0",
         criterion5_remark_equivalence},
        {"no local cohomology above the degree bounds (checked one degree above)",
         criterion6_degree_bounds},
        {"pseudo-Gorenstein classifier matches the oracle; all clauses witnessed",
         criterion7_pseudo_gorenstein},
        {"pinned conventions for s(G) and f(G) hold and match the oracle",
         criterion8_documented_conventions},
    };

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(checker);
        } catch (const std::exception& e) {
            checker.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        std::printf("%s criterion %zu: %s [%.1f s]%s%s\n", checker.ok ? "PASS" : "FAIL", k + 1,
                    criteria[k].first.c_str(), elapsed,
                    checker.detail.str().empty() ? "" : " -- ", checker.detail.str().c_str());
        if (!checker.ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
