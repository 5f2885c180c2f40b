#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ebetti/instance.hpp"

namespace ebetti {

/// Cross-validation of the closed forms against the homology oracle over a
/// corpus of graphs: exhaustive over all non-empty graphs for n=5, seeded
/// random for larger n.
struct SweepOptions {
    int n = 5;
    int alpha_max = 6;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    int count = 0;  // number of random graphs when not exhaustive
    int threads = 1;
};

struct SweepMismatch {
    std::vector<Edge> edges;
    int alpha = 0;
    int beta = 0;
    std::string detail;
};

struct SweepResult {
    long long graphs = 0;
    long long instances = 0;
    long long pseudo_gorenstein_instances = 0;
    std::vector<SweepMismatch> mismatches;

    bool clean() const { return mismatches.empty(); }
};

SweepResult run_sweep(const SweepOptions& options, std::ostream* log = nullptr);

/// Edge list for a bitmask over the C(n,2) vertex pairs in lexicographic
/// order: bit 0 is (1,2), bit 1 is (1,3), ..., last bit is (n-1,n).
std::vector<Edge> edges_from_mask(int n, std::uint64_t mask);

/// All weight pairs (alpha, beta) with 1 <= beta < alpha <= alpha_max.
std::vector<std::pair<int, int>> weight_pairs_upto(int alpha_max);

/// Fixed pool of weight pairs used by random sweeps: hits all four parity
/// classes and the families alpha=beta+1, alpha=beta+2, (4,2), alpha>=beta+3,
/// alpha>=2*beta. Filtered to alpha <= alpha_max.
std::vector<std::pair<int, int>> curated_weight_pairs(int alpha_max);

/// Deterministic random graph corpus: alternates uniform edge-masks with
/// uniform edge counts so both sparse and dense graphs appear.
std::vector<std::uint64_t> random_graph_masks(int n, std::uint64_t seed, int count);

}  // namespace ebetti
