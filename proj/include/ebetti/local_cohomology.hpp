#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ebetti/instance.hpp"

namespace ebetti {

/// Sum of all entries of b except the i-th and j-th (1-indexed).
int sigma(const std::vector<int>& b, int i, int j);

/// Degree complex of a multidegree b in N^n: the simplicial complex whose
/// edges are the pairs {i,j} with sigma_{i,j}(b) = |b| - b_i - b_j below the
/// pair's weight. It has dimension <= 1 and no isolated vertices, so it is a
/// graph; it is void exactly when no pair qualifies (x^b lies in the ideal).
struct DegreeComplex {
    std::vector<Edge> edges;
    bool non_void = false;
};

DegreeComplex degree_complex(const Instance& inst, const std::vector<int>& b);

struct HomologyDims {
    long long h0 = 0;  // components - 1 on the support; 0 for the void complex
    long long h1 = 0;  // edges + components - vertices; 0 for the void complex
};

HomologyDims reduced_homology_dims(const DegreeComplex& complex);

/// dim of the local cohomology module H^i_m(R/I) in total degree d, summed
/// over all multidegrees in N^n (degrees with a negative coordinate never
/// contribute for these ideals). Only i in {1, 2} occurs since dim R/I = 2
/// and H^0 vanishes.
///
/// The multidegree space may be partitioned by first coordinate across
/// worker threads; accumulation is plain addition, so the result does not
/// depend on the schedule.
long long local_cohomology_dim(const Instance& inst, int cohomological_degree,
                               int total_degree, int threads = 1);

struct CohomologyProfile {
    std::map<int, long long> h1_by_degree;  // nonzero dims only
    std::map<int, long long> h2_by_degree;
    std::optional<int> a1;  // top degree with H^1 != 0
    int a2 = 0;             // top degree with H^2 != 0
};

enum class ProfileDepth {
    ExtremalOnly,  // stop each scan at its top non-vanishing degree
    Full,          // record every non-vanishing degree down to 0
};

/// Scans H^2 from 3*alpha-3 downward and H^1 from 2*alpha-2 downward. Before
/// scanning, verifies that both bounds hold one degree above; a violation
/// throws DegreeBoundError.
CohomologyProfile cohomology_profile(const Instance& inst,
                                     ProfileDepth depth = ProfileDepth::ExtremalOnly,
                                     int threads = 1);

/// Ground-truth extremal Betti data via the corner correspondence between the
/// Betti diagram and the local cohomology diagram: H^1 contributes the corner
/// in column n-1 whenever it does not vanish identically, H^2 the corner in
/// column n-2 whenever a1 + 1 < a2 + 2.
ExtremalReport extremal_report_oracle(const Instance& inst, int threads = 1);

}  // namespace ebetti
