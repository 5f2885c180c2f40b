#include "ebetti/closed_form.hpp"

#include <string>

#include "ebetti/errors.hpp"
#include "ebetti/lattice.hpp"

namespace ebetti {

namespace {

long long clamp0(long long m) { return m > 0 ? m : 0; }

void require_weights(int alpha, int beta) {
    if (beta < 1 || alpha <= beta) {
        throw InvalidWeightsError("weights must satisfy alpha > beta >= 1, got alpha=" +
                                  std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
}

long long exact_div(long long value, long long divisor) {
    if (value % divisor != 0) {
        throw Error("coefficient " + std::to_string(value) + " not divisible by " +
                    std::to_string(divisor));
    }
    return value / divisor;
}

enum class Shape {
    Girth3,      // contains a triangle
    HighDegree,  // triangle-free with a vertex of degree >= 2
    Matching,    // disjoint edges
};

Shape classify_shape(const InvariantBundle& inv) {
    if (inv.c3 > 0) return Shape::Girth3;
    if (inv.max_degree >= 2) return Shape::HighDegree;
    return Shape::Matching;
}

}  // namespace

long long b1_value(int alpha, int beta, const InvariantBundle& inv) {
    require_weights(alpha, beta);
    const long long d = alpha - beta;
    const long long m1 = clamp0(alpha - 2LL * beta + 1);
    const long long m0 = clamp0(alpha - 2LL * beta);
    long long coef0, coef1, coef2;
    if (alpha % 2 != 0) {
        coef0 = d * d + (d - 1) * (d - 1) - m1 * m1;
        if (beta % 2 == 0) {
            coef1 = exact_div((d - 1) * (2 * d - 1) - m1 * m1, 2);
            coef2 = exact_div(2 * (d - 1) * (d - 1) - m1 * m1, 4);
        } else {
            coef1 = exact_div(d * d + (d - 1) * (d - 2) - m1 * m1, 2);
            coef2 = exact_div(d * d + (d - 2) * (d - 2) - m1 * m1, 4);
        }
    } else {
        const long long sub = m0 * (alpha - 2LL * beta + 2);
        coef0 = 2 * d * (d - 1) - sub;
        if (beta % 2 == 0) {
            coef1 = exact_div(d * (2 * d - 3) - sub, 2);
            coef2 = exact_div(2 * d * (d - 2) - sub, 4);
        } else {
            coef1 = exact_div((d - 1) * (2 * d - 1) - sub, 2);
            coef2 = exact_div(2 * (d - 1) * (d - 1) - sub, 4);
        }
    }
    return coef0 * inv.p0 + coef1 * inv.p1 + coef2 * inv.p2 + m0 * inv.b;
}

long long b2_value(int alpha, int beta, const InvariantBundle& inv, int n) {
    require_weights(alpha, beta);
    const long long outside_pairs = binomial(n - inv.num_vertices, 2);
    if (beta == 1) {
        return (alpha - 2LL) * outside_pairs;
    }
    // Per disconnecting non-edge: the interior lattice count once per edge of
    // G (the beta-1 mass sits on an edge, both endpoints positive), plus a
    // boundary family placing the whole beta-1 mass on one vertex of V(G).
    const long long per_pair = sol2_closed(alpha, beta) * inv.num_edges +
                               clamp0(alpha - 2LL * beta) * inv.num_vertices;
    return per_pair * outside_pairs;
}

ExtremalReport dispatch(const Instance& inst) {
    return dispatch(inst, compute_invariants(inst.graph));
}

ExtremalReport dispatch(const Instance& inst, const InvariantBundle& inv) {
    const int n = inst.n;
    const int alpha = inst.alpha;
    const int beta = inst.beta;
    const Shape shape = classify_shape(inv);
    const long long num_edges = inv.num_edges;

    // Top H^2 degree and its dimension, by graph shape. Shared by every
    // weight family; only the beta=1 branch of the middle shape varies, and
    // the (alpha-2) factor makes it uniform.
    int a2;
    long long v2;
    switch (shape) {
        case Shape::Girth3:
            a2 = 3 * alpha - 3;
            v2 = inv.c3;
            break;
        case Shape::HighDegree:
            a2 = 2 * alpha + beta - 3;
            v2 = beta == 1 ? inv.a + (alpha - 2LL) * inv.c4 : inv.sum_deg_choose2;
            break;
        case Shape::Matching:
            a2 = alpha + 2 * beta - 3;
            v2 = (n - 2LL) * num_edges;
            break;
    }

    bool cm = false;
    std::optional<int> a1;
    long long v1 = 0;

    if (alpha == beta + 1) {
        cm = beta == 1 || (beta == 3 && inv.s == 0) ||
             (beta != 1 && beta != 3 && inv.p0 == 0);
        if (!cm) {
            if (beta == 3) {
                a1 = 5;
                v1 = inv.s;
            } else if (beta % 2 != 0) {
                a1 = alpha + beta - 2;
                v1 = (n - 4LL) * inv.p0;
            } else {
                a1 = alpha + beta - 1;
                v1 = inv.p0;
            }
        }
    } else if (alpha == 4 && beta == 2) {
        cm = inv.g3 && inv.g4 && inv.g5;
        if (!cm) {
            switch (shape) {
                case Shape::Matching:
                    if (num_edges == 1) {
                        a1 = 3;
                        v1 = binomial(n - 2, 3);
                    } else {
                        a1 = 6;
                        v1 = 4 * inv.p0;
                    }
                    break;
                case Shape::Girth3:
                    if (!inv.g3) {
                        a1 = 6;
                        v1 = 4 * inv.p0 + inv.p1;
                    } else if (!inv.g4) {
                        a1 = 5;
                        v1 = inv.r.as_integer();
                    } else {
                        a1 = 3;
                        v1 = binomial(n - inv.num_vertices, 3);
                    }
                    break;
                case Shape::HighDegree:
                    if (inv.g1) {
                        a1 = 6;
                        v1 = 4 * inv.p0 + inv.p1;
                    } else {
                        a1 = 3;
                        v1 = binomial(n - inv.num_vertices, 3);
                    }
                    break;
            }
        }
    } else if (alpha == beta + 2 && beta % 2 != 0) {
        cm = !inv.g1 && !inv.g2;
        if (!cm) {
            const long long outside_pairs = binomial(n - inv.num_vertices, 2);
            switch (shape) {
                case Shape::Matching:
                    if (num_edges == 1) {
                        a1 = alpha + beta - 2;
                        v1 = binomial(n - 2, 2);
                    } else {
                        a1 = alpha + beta;
                        v1 = beta == 1 ? inv.p0 + inv.b : 5 * inv.p0;
                    }
                    break;
                case Shape::Girth3:
                    if (inv.g1) {
                        a1 = alpha + beta;
                        v1 = beta == 1 ? inv.p0 + inv.b : 5 * inv.p0 + 2 * inv.p1 + inv.p2;
                    } else {
                        a1 = alpha + beta - 2;
                        v1 = (beta == 1 ? 1 : num_edges) * outside_pairs;
                    }
                    break;
                case Shape::HighDegree:
                    if (inv.g1) {
                        a1 = alpha + beta;
                        v1 = beta == 1 ? inv.p0 + inv.b : 5 * inv.p0 + 2 * inv.p1;
                    } else {
                        a1 = alpha + beta - 2;
                        v1 = (beta == 1 ? 1 : num_edges) * outside_pairs;
                    }
                    break;
            }
        }
    } else if (alpha == beta + 2) {
        // beta even, beta >= 4
        cm = !inv.g1 && !inv.g2;
        if (!cm) {
            const long long outside_pairs = binomial(n - inv.num_vertices, 2);
            switch (shape) {
                case Shape::Matching:
                    if (num_edges == 1) {
                        a1 = alpha + beta - 3;
                        v1 = (n - 4LL) * binomial(n - 2, 2);
                    } else {
                        a1 = alpha + beta;
                        v1 = 4 * inv.p0;
                    }
                    break;
                case Shape::Girth3:
                    if (inv.g1 && !inv.g3) {
                        a1 = alpha + beta;
                        v1 = 4 * inv.p0 + inv.p1;
                    } else if (inv.g1) {
                        a1 = alpha + beta - 1;
                        v1 = beta == 4 ? (n - 4LL) * inv.p2 - inv.f : (n - 4LL) * inv.p2;
                    } else {
                        a1 = alpha + beta - 3;
                        v1 = (beta == 4 ? (n - 4LL) * num_edges - inv.sum_deg_choose2 + inv.c3
                                        : (n - 4LL) * num_edges) *
                             outside_pairs;
                    }
                    break;
                case Shape::HighDegree:
                    if (inv.g1) {
                        a1 = alpha + beta;
                        v1 = 4 * inv.p0 + inv.p1;
                    } else {
                        a1 = alpha + beta - 3;
                        v1 = (beta == 4 ? (n - 4LL) * num_edges - inv.sum_deg_choose2
                                        : (n - 4LL) * num_edges) *
                             outside_pairs;
                    }
                    break;
            }
        }
    } else {
        // alpha >= beta + 3
        cm = !inv.g1 && !inv.g2;
        if (!cm) {
            if (shape == Shape::Matching && num_edges == 1) {
                a1 = alpha + beta - 2;
                v1 = b2_value(alpha, beta, inv, n);
            } else if (shape == Shape::Matching || inv.g1) {
                a1 = 2 * alpha - 2;
                v1 = b1_value(alpha, beta, inv);
            } else {
                a1 = alpha + beta - 2;
                v1 = b2_value(alpha, beta, inv, n);
            }
        }
    }

    if (cm && shape == Shape::Matching && alpha != beta + 1) {
        throw DispatchGapError("matching classified Cohen-Macaulay outside alpha=beta+1");
    }

    ExtremalReport report;
    report.a2 = a2;
    report.cohen_macaulay = cm;
    if (cm) {
        report.corners.push_back({n - 2, n + a2, v2, CornerKind::H2});
    } else {
        report.a1 = a1;
        report.corners.push_back({n - 1, n + *a1, v1, CornerKind::H1});
        if (*a1 <= a2) {
            report.corners.push_back({n - 2, n + a2, v2, CornerKind::H2});
        }
    }
    report.pseudo_gorenstein = cm && v2 == 1;

    for (const Corner& corner : report.corners) {
        if (corner.value < 1) {
            throw DispatchGapError("non-positive extremal value " +
                                   std::to_string(corner.value) + " at column " +
                                   std::to_string(corner.column) + " for alpha=" +
                                   std::to_string(alpha) + " beta=" + std::to_string(beta));
        }
    }
    return report;
}

const char* clause_description(PseudoGorensteinClause clause) {
    switch (clause) {
        case PseudoGorensteinClause::MinWeightsUniqueDegree2:
            return "alpha=2, beta=1, and G has exactly one vertex of degree 2 with all "
                   "other vertices of degree 1";
        case PseudoGorensteinClause::MinWeightsUniqueTriangle:
            return "alpha=2, beta=1, and G contains exactly one triangle";
        case PseudoGorensteinClause::FourThreeUniqueTriangle:
            return "alpha=4, beta=3, s(G)=0, and G contains exactly one triangle";
        case PseudoGorensteinClause::AdjacentWeightsUniqueTriangle:
            return "alpha=beta+1 with beta not in {1,3}, p0(G)=0, and G contains exactly "
                   "one triangle";
        case PseudoGorensteinClause::AdjacentWeightsStar:
            return "alpha=beta+1 with beta != 1, and G is a two-edge star";
        case PseudoGorensteinClause::FourTwoSmall:
            return "alpha=4, beta=2, n=5, and G is a triangle or a two-edge star";
    }
    return "";
}

std::optional<PseudoGorensteinClause> pseudo_gorenstein_clause(const Instance& inst) {
    return pseudo_gorenstein_clause(inst, compute_invariants(inst.graph));
}

std::optional<PseudoGorensteinClause> pseudo_gorenstein_clause(const Instance& inst,
                                                               const InvariantBundle& inv) {
    const SimpleGraph& g = inst.graph;
    int degree2 = 0;
    bool higher_degree = false;
    for (int v : g.support()) {
        if (g.degree(v) == 2) ++degree2;
        if (g.degree(v) > 2) higher_degree = true;
    }
    const bool one_degree2_rest_leaves = degree2 == 1 && !higher_degree;
    const bool star_k12 = inv.num_edges == 2 && inv.num_vertices == 3;
    const bool triangle = inv.num_edges == 3 && inv.num_vertices == 3;

    if (inst.alpha == 2 && inst.beta == 1) {
        if (one_degree2_rest_leaves) return PseudoGorensteinClause::MinWeightsUniqueDegree2;
        if (inv.c3 == 1) return PseudoGorensteinClause::MinWeightsUniqueTriangle;
    }
    if (inst.alpha == 4 && inst.beta == 3 && inv.s == 0 && inv.c3 == 1) {
        return PseudoGorensteinClause::FourThreeUniqueTriangle;
    }
    if (inst.alpha == inst.beta + 1 && inst.beta != 1 && inst.beta != 3 && inv.p0 == 0 &&
        inv.c3 == 1) {
        return PseudoGorensteinClause::AdjacentWeightsUniqueTriangle;
    }
    if (inst.alpha == inst.beta + 1 && inst.beta != 1 && star_k12) {
        return PseudoGorensteinClause::AdjacentWeightsStar;
    }
    if (inst.alpha == 4 && inst.beta == 2 && inst.n == 5 && (triangle || star_k12)) {
        return PseudoGorensteinClause::FourTwoSmall;
    }
    return std::nullopt;
}

bool pseudo_gorenstein(const Instance& inst) {
    return pseudo_gorenstein_clause(inst).has_value();
}

}  // namespace ebetti
