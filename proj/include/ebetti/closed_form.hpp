#pragma once

#include <optional>

#include "ebetti/instance.hpp"
#include "ebetti/invariants.hpp"

namespace ebetti {

/// Count of H^1 multidegrees when some disjoint edge pair avoids every
/// 4-cycle: a parity-split quadratic in (alpha, beta) weighted by the pair
/// counts p0, p1, p2 and by b(G).
long long b1_value(int alpha, int beta, const InvariantBundle& inv);

/// Count of H^1 multidegrees in the disconnecting-non-edge regime: per-pair
/// lattice count plus a boundary family indexed by V(G), times the number of
/// disconnecting non-edges.
long long b2_value(int alpha, int beta, const InvariantBundle& inv, int n);

/// Extremal Betti data of R/I computed purely from graph invariants and the
/// weight pair, without any homology enumeration.
ExtremalReport dispatch(const Instance& inst);
ExtremalReport dispatch(const Instance& inst, const InvariantBundle& inv);

enum class PseudoGorensteinClause {
    MinWeightsUniqueDegree2,        // (2,1): one degree-2 vertex, all others degree 1
    MinWeightsUniqueTriangle,       // (2,1): exactly one triangle
    FourThreeUniqueTriangle,        // (4,3): s(G)=0 and exactly one triangle
    AdjacentWeightsUniqueTriangle,  // alpha=beta+1, beta not in {1,3}, p0=0, one triangle
    AdjacentWeightsStar,            // alpha=beta+1, beta != 1, G a two-edge star
    FourTwoSmall,                   // (4,2), n=5, G a triangle or a two-edge star
};

const char* clause_description(PseudoGorensteinClause clause);

/// Matching classification clause, if any. R/I is pseudo-Gorenstein exactly
/// when one clause applies.
std::optional<PseudoGorensteinClause> pseudo_gorenstein_clause(const Instance& inst);
std::optional<PseudoGorensteinClause> pseudo_gorenstein_clause(const Instance& inst,
                                                               const InvariantBundle& inv);

bool pseudo_gorenstein(const Instance& inst);

}  // namespace ebetti
