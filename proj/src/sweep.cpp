#include "ebetti/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "ebetti/closed_form.hpp"
#include "ebetti/errors.hpp"
#include "ebetti/local_cohomology.hpp"

namespace ebetti {

namespace {

// one-line instance document, ready to paste into a file for reproduction
std::string instance_json_line(int n, int alpha, int beta, const std::vector<Edge>& edges) {
    std::ostringstream out;
    out << "{\"n\":" << n << ",\"alpha\":" << alpha << ",\"beta\":" << beta << ",\"edges\":[";
    for (size_t k = 0; k < edges.size(); ++k) {
        if (k > 0) out << ",";
        out << "[" << edges[k].first << "," << edges[k].second << "]";
    }
    out << "]}";
    return out.str();
}

struct GraphTask {
    std::uint64_t mask;
    std::vector<std::pair<int, int>> weight_pairs;
};

// Compares both engines on one instance; appends mismatches.
void check_instance(const Instance& inst, const InvariantBundle& inv,
                    std::vector<SweepMismatch>& mismatches, long long& pg_count) {
    ExtremalReport closed;
    ExtremalReport oracle;
    try {
        closed = dispatch(inst, inv);
        oracle = extremal_report_oracle(inst);
    } catch (const Error& e) {
        mismatches.push_back({inst.graph.edges(), inst.alpha, inst.beta,
                              std::string("engine error: ") + e.what()});
        return;
    }
    if (!(closed == oracle)) {
        mismatches.push_back({inst.graph.edges(), inst.alpha, inst.beta,
                              "closed form " + to_string(closed) + " vs oracle " +
                                  to_string(oracle)});
        return;
    }
    const bool classified = pseudo_gorenstein_clause(inst, inv).has_value();
    if (classified != oracle.pseudo_gorenstein) {
        mismatches.push_back({inst.graph.edges(), inst.alpha, inst.beta,
                              std::string("pseudo-Gorenstein classifier says ") +
                                  (classified ? "yes" : "no") + " but oracle says " +
                                  (classified ? "no" : "yes")});
        return;
    }
    if (oracle.pseudo_gorenstein) ++pg_count;
}

}  // namespace

std::vector<Edge> edges_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j, ++bit) {
            if (mask >> bit & 1) edges.emplace_back(i, j);
        }
    }
    return edges;
}

std::vector<std::pair<int, int>> weight_pairs_upto(int alpha_max) {
    std::vector<std::pair<int, int>> pairs;
    for (int alpha = 2; alpha <= alpha_max; ++alpha) {
        for (int beta = 1; beta < alpha; ++beta) pairs.emplace_back(alpha, beta);
    }
    return pairs;
}

std::vector<std::pair<int, int>> curated_weight_pairs(int alpha_max) {
    static const std::vector<std::pair<int, int>> pool = {
        {2, 1}, {4, 1}, {5, 3}, {6, 4}, {8, 3}, {3, 2}, {5, 2}, {7, 3},
        {4, 2}, {6, 5}, {8, 6}, {3, 1}, {6, 2}, {4, 3}, {7, 5}, {6, 3}, {8, 5},
    };
    std::vector<std::pair<int, int>> pairs;
    for (auto p : pool) {
        if (p.first <= alpha_max) pairs.push_back(p);
    }
    return pairs;
}

std::vector<std::uint64_t> random_graph_masks(int n, std::uint64_t seed, int count) {
    const int bits = n * (n - 1) / 2;
    const std::uint64_t full = (std::uint64_t{1} << bits) - 1;
    std::mt19937_64 gen(seed);
    std::vector<std::uint64_t> masks;
    masks.reserve(count);
    std::vector<int> positions(bits);
    for (int k = 0; k < count; ++k) {
        if (k % 2 == 0) {
            std::uint64_t mask = 0;
            while (mask == 0) mask = gen() & full;
            masks.push_back(mask);
        } else {
            // uniform edge count, then a uniform subset of that size
            const int edges = 1 + static_cast<int>(gen() % bits);
            for (int i = 0; i < bits; ++i) positions[i] = i;
            std::uint64_t mask = 0;
            for (int i = 0; i < edges; ++i) {
                const int j = i + static_cast<int>(gen() % (bits - i));
                std::swap(positions[i], positions[j]);
                mask |= std::uint64_t{1} << positions[i];
            }
            masks.push_back(mask);
        }
    }
    return masks;
}

SweepResult run_sweep(const SweepOptions& options, std::ostream* log) {
    std::vector<GraphTask> tasks;
    if (options.exhaustive) {
        const int bits = options.n * (options.n - 1) / 2;
        const auto pairs = weight_pairs_upto(options.alpha_max);
        tasks.reserve((std::uint64_t{1} << bits) - 1);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << bits); ++mask) {
            tasks.push_back({mask, pairs});
        }
    } else {
        const auto pool = curated_weight_pairs(options.alpha_max);
        const auto masks = random_graph_masks(options.n, options.seed, options.count);
        constexpr size_t kPairsPerGraph = 5;
        for (size_t k = 0; k < masks.size(); ++k) {
            GraphTask task{masks[k], {}};
            for (size_t t = 0; t < std::min(kPairsPerGraph, pool.size()); ++t) {
                task.weight_pairs.push_back(pool[(k * kPairsPerGraph + t) % pool.size()]);
            }
            tasks.push_back(std::move(task));
        }
    }

    const int threads = std::max(1, options.threads);
    std::atomic<size_t> next{0};
    std::atomic<long long> done{0};
    std::vector<std::vector<SweepMismatch>> found(threads);
    std::vector<long long> instances(threads, 0), pg(threads, 0);

    const auto worker = [&](int id) {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= tasks.size()) break;
            const GraphTask& task = tasks[k];
            const auto edges = edges_from_mask(options.n, task.mask);
            const SimpleGraph graph(options.n, edges);
            const InvariantBundle inv = compute_invariants(graph);

            // every graph must satisfy: some free pair exists <=> b(G) > 0
            if (inv.g1 != (inv.b > 0)) {
                found[id].push_back({edges, 0, 0, "g1 and b(G) > 0 disagree"});
            }

            for (auto [alpha, beta] : task.weight_pairs) {
                const Instance inst{options.n, alpha, beta, graph};
                check_instance(inst, inv, found[id], pg[id]);
                ++instances[id];
            }
            const long long total = done.fetch_add(1) + 1;
            if (log && total % 200 == 0) {
                *log << "  ..." << total << "/" << tasks.size() << " graphs\n";
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }

    SweepResult result;
    result.graphs = static_cast<long long>(tasks.size());
    for (int t = 0; t < threads; ++t) {
        result.instances += instances[t];
        result.pseudo_gorenstein_instances += pg[t];
        result.mismatches.insert(result.mismatches.end(), found[t].begin(), found[t].end());
    }
    std::sort(result.mismatches.begin(), result.mismatches.end(),
              [](const SweepMismatch& a, const SweepMismatch& b) {
                  return std::tie(a.edges, a.alpha, a.beta) < std::tie(b.edges, b.alpha, b.beta);
              });
    if (log) {
        for (const auto& m : result.mismatches) {
            if (m.alpha > 0) {
                *log << "MISMATCH " << instance_json_line(options.n, m.alpha, m.beta, m.edges)
                     << " : " << m.detail << "\n";
            } else {
                *log << "MISMATCH graph-level "
                     << instance_json_line(options.n, 2, 1, m.edges) << " : " << m.detail
                     << "\n";
            }
        }
        *log << "sweep: " << result.graphs << " graphs, " << result.instances
             << " instances, " << result.mismatches.size() << " mismatches\n";
    }
    return result;
}

}  // namespace ebetti
