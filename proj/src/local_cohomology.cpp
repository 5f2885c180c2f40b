#include "ebetti/local_cohomology.hpp"

#include <array>
#include <string>
#include <thread>

#include "ebetti/errors.hpp"

namespace ebetti {

namespace {

// The enumeration is exponential in n; this cap keeps the hot loop on fixed
// stack arrays and rejects inputs that could never finish anyway.
constexpr int kMaxVertices = 16;
constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;

struct PairTable {
    int n = 0;
    int pair_count = 0;
    std::array<int, kMaxPairs> u{};          // 0-indexed endpoints
    std::array<int, kMaxPairs> v{};
    std::array<int, kMaxPairs> threshold{};  // edge iff b[u] + b[v] > threshold
};

PairTable make_pair_table(const Instance& inst, int total_degree) {
    if (inst.n > kMaxVertices) {
        throw UnsupportedInstanceError("homology oracle supports n <= " +
                                       std::to_string(kMaxVertices));
    }
    PairTable table;
    table.n = inst.n;
    for (int i = 1; i <= inst.n; ++i) {
        for (int j = i + 1; j <= inst.n; ++j) {
            table.u[table.pair_count] = i - 1;
            table.v[table.pair_count] = j - 1;
            // sigma_{i,j}(b) < w  <=>  b_i + b_j > |b| - w
            table.threshold[table.pair_count] = total_degree - inst.weight(i, j);
            ++table.pair_count;
        }
    }
    return table;
}

// Reduced homology dimension of the degree complex of b, in homological
// degree i-1. Union-find over at most kMaxVertices entries.
template <int COH_DEGREE>
long long complex_contribution(const PairTable& table, const int* b) {
    int parent[kMaxVertices];
    for (int x = 0; x < table.n; ++x) parent[x] = -1;
    int edges = 0, vertices = 0, components = 0;
    for (int p = 0; p < table.pair_count; ++p) {
        const int a = table.u[p];
        const int c = table.v[p];
        if (b[a] + b[c] <= table.threshold[p]) continue;
        ++edges;
        if (parent[a] < 0) {
            parent[a] = a;
            ++vertices;
            ++components;
        }
        if (parent[c] < 0) {
            parent[c] = c;
            ++vertices;
            ++components;
        }
        int ra = a;
        while (parent[ra] != ra) ra = parent[ra] = parent[parent[ra]];
        int rc = c;
        while (parent[rc] != rc) rc = parent[rc] = parent[parent[rc]];
        if (ra != rc) {
            parent[ra] = rc;
            --components;
        }
    }
    if (edges == 0) return 0;
    if constexpr (COH_DEGREE == 1) {
        return components - 1;
    } else {
        return edges + components - vertices;
    }
}

// Sums contributions over all b in N^n with |b| = total and b[0] taking the
// values first, first - stride, first - 2*stride, ... (>= 0). Suffix
// coordinates run through compositions in lexicographic order.
template <int COH_DEGREE>
long long accumulate_slice(const PairTable& table, int total, int first, int stride) {
    long long sum = 0;
    int b[kMaxVertices];
    const int n = table.n;
    for (int head = first; head >= 0; head -= stride) {
        const int rest = total - head;
        for (int x = 0; x < n; ++x) b[x] = 0;
        b[0] = head;
        if (n == 1) {
            if (rest == 0) sum += complex_contribution<COH_DEGREE>(table, b);
            continue;
        }
        b[1] = rest;
        while (true) {
            sum += complex_contribution<COH_DEGREE>(table, b);
            int k = -1;
            for (int x = n - 2; x >= 1; --x) {
                if (b[x] > 0) {
                    k = x;
                    break;
                }
            }
            if (k < 0) break;
            --b[k];
            const int carry = b[n - 1] + 1;
            b[n - 1] = 0;
            b[k + 1] = carry;
        }
    }
    return sum;
}

long long sum_over_degree(const Instance& inst, int cohomological_degree, int total_degree,
                          int threads) {
    const PairTable table = make_pair_table(inst, total_degree);
    const auto slice = [&](int first, int stride) {
        return cohomological_degree == 1
                   ? accumulate_slice<1>(table, total_degree, first, stride)
                   : accumulate_slice<2>(table, total_degree, first, stride);
    };
    if (threads <= 1 || total_degree < threads) {
        return slice(total_degree, 1);
    }
    std::vector<long long> partial(threads, 0);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] { partial[t] = slice(total_degree - t, threads); });
    }
    for (auto& w : workers) w.join();
    long long sum = 0;
    for (long long part : partial) sum += part;
    return sum;
}

}  // namespace

int sigma(const std::vector<int>& b, int i, int j) {
    int total = 0;
    for (int entry : b) total += entry;
    return total - b[i - 1] - b[j - 1];
}

DegreeComplex degree_complex(const Instance& inst, const std::vector<int>& b) {
    if (static_cast<int>(b.size()) != inst.n) {
        throw DimensionMismatchError("multidegree has " + std::to_string(b.size()) +
                                     " entries, expected " + std::to_string(inst.n));
    }
    for (int entry : b) {
        if (entry < 0) {
            throw DimensionMismatchError("multidegree entries must be nonnegative");
        }
    }
    DegreeComplex complex;
    for (int i = 1; i <= inst.n; ++i) {
        for (int j = i + 1; j <= inst.n; ++j) {
            if (sigma(b, i, j) < inst.weight(i, j)) complex.edges.emplace_back(i, j);
        }
    }
    complex.non_void = !complex.edges.empty();
    return complex;
}

HomologyDims reduced_homology_dims(const DegreeComplex& complex) {
    if (complex.edges.empty()) return {0, 0};
    // support graph on a throwaway universe large enough for the endpoints
    int max_vertex = 0;
    for (auto [i, j] : complex.edges) max_vertex = std::max(max_vertex, j);
    SimpleGraph graph(max_vertex, complex.edges);
    const long long components = graph.component_count();
    return {components - 1,
            graph.edge_count() + components - graph.support_size()};
}

long long local_cohomology_dim(const Instance& inst, int cohomological_degree,
                               int total_degree, int threads) {
    if (cohomological_degree != 1 && cohomological_degree != 2) {
        throw Error("cohomological degree must be 1 or 2");
    }
    if (total_degree < 0) return 0;
    return sum_over_degree(inst, cohomological_degree, total_degree, threads);
}

CohomologyProfile cohomology_profile(const Instance& inst, ProfileDepth depth, int threads) {
    const int h1_bound = 2 * inst.alpha - 2;
    const int h2_bound = 3 * inst.alpha - 3;

    if (local_cohomology_dim(inst, 1, h1_bound + 1, threads) != 0) {
        throw DegreeBoundError("H^1 does not vanish in degree " + std::to_string(h1_bound + 1));
    }
    if (local_cohomology_dim(inst, 2, h2_bound + 1, threads) != 0) {
        throw DegreeBoundError("H^2 does not vanish in degree " + std::to_string(h2_bound + 1));
    }

    CohomologyProfile profile;
    bool have_a2 = false;
    for (int d = h2_bound; d >= 0; --d) {
        if (have_a2 && depth == ProfileDepth::ExtremalOnly) break;
        const long long dim = local_cohomology_dim(inst, 2, d, threads);
        if (dim > 0) {
            profile.h2_by_degree[d] = dim;
            if (!have_a2) {
                profile.a2 = d;
                have_a2 = true;
            }
        }
    }
    if (!have_a2) {
        throw Error("H^2 vanished in every degree; R/I should have dimension 2");
    }
    for (int d = h1_bound; d >= 0; --d) {
        if (profile.a1 && depth == ProfileDepth::ExtremalOnly) break;
        const long long dim = local_cohomology_dim(inst, 1, d, threads);
        if (dim > 0) {
            profile.h1_by_degree[d] = dim;
            if (!profile.a1) profile.a1 = d;
        }
    }
    return profile;
}

ExtremalReport extremal_report_oracle(const Instance& inst, int threads) {
    const CohomologyProfile profile = cohomology_profile(inst, ProfileDepth::ExtremalOnly, threads);
    ExtremalReport report;
    report.a2 = profile.a2;
    if (profile.a1) {
        report.a1 = profile.a1;
        report.cohen_macaulay = false;
        report.corners.push_back(
            {inst.n - 1, inst.n + *profile.a1, profile.h1_by_degree.at(*profile.a1),
             CornerKind::H1});
        if (*profile.a1 <= profile.a2) {
            report.corners.push_back({inst.n - 2, inst.n + profile.a2,
                                      profile.h2_by_degree.at(profile.a2), CornerKind::H2});
        }
    } else {
        report.cohen_macaulay = true;
        report.corners.push_back({inst.n - 2, inst.n + profile.a2,
                                  profile.h2_by_degree.at(profile.a2), CornerKind::H2});
    }
    report.pseudo_gorenstein = report.cohen_macaulay && report.corners.front().value == 1;
    return report;
}

}  // namespace ebetti
