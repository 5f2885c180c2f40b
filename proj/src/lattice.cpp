#include "ebetti/lattice.hpp"

#include <string>

#include "ebetti/errors.hpp"

namespace ebetti {

namespace {

long long clamp0(long long m) { return m > 0 ? m : 0; }

void require_sol1(int alpha, int beta) {
    if (beta < 1 || alpha <= beta) {
        throw InvalidWeightsError("weights must satisfy alpha > beta >= 1, got alpha=" +
                                  std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
}

void require_sol2(int alpha, int beta) {
    if (beta <= 1 || alpha < beta + 2) {
        throw InvalidWeightsError("weights must satisfy beta > 1 and alpha >= beta+2, got alpha=" +
                                  std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
}

}  // namespace

long long sol1_closed(int alpha, int beta) {
    require_sol1(alpha, beta);
    const long long d = alpha - beta;
    if (alpha % 2 != 0) {
        const long long m = clamp0(alpha - 2LL * beta + 1);
        return d * d + (d - 1) * (d - 1) - m * m;
    }
    const long long m = clamp0(alpha - 2LL * beta);
    return 2 * d * (d - 1) - m * (alpha - 2LL * beta + 2);
}

long long sol1_brute(int alpha, int beta) {
    require_sol1(alpha, beta);
    long long count = 0;
    for (int x = 1; x <= alpha - 2; ++x) {
        for (int y = 1; y <= alpha - 2; ++y) {
            if (x + y < beta || x + y > 2 * alpha - beta - 2) continue;
            if (x - y < beta + 1 - alpha || x - y > alpha - beta - 1) continue;
            ++count;
        }
    }
    return count;
}

long long sol2_closed(int alpha, int beta) {
    require_sol2(alpha, beta);
    const long long d = alpha - beta;
    const bool alpha_odd = alpha % 2 != 0;
    const bool beta_odd = beta % 2 != 0;
    const long long m1 = clamp0(alpha - 2LL * beta + 1);
    const long long m0 = clamp0(alpha - 2LL * beta);
    long long numerator;
    long long denominator;
    if (alpha_odd && !beta_odd) {
        numerator = (d - 1) * (d - 1) - m1 * m1;
        denominator = 2;
    } else if (alpha_odd && beta_odd) {
        numerator = d * d + (d - 2) * (d - 2) - 2 * m1 * m1;
        denominator = 4;
    } else if (!alpha_odd && !beta_odd) {
        numerator = d * (d - 2) - m0 * (alpha - 2LL * beta + 2);
        denominator = 2;
    } else {
        numerator = (d - 1) * (d - 1) - m0 * (alpha - 2LL * beta + 2);
        denominator = 2;
    }
    if (numerator % denominator != 0) {
        throw Error("solution count is not integral; formula misapplied");
    }
    return numerator / denominator;
}

long long sol2_brute(int alpha, int beta) {
    require_sol2(alpha, beta);
    long long count = 0;
    for (int x = 1; x <= alpha - 2; ++x) {
        for (int y = 1; y <= beta - 2; ++y) {
            if (x + y < beta || x + y > alpha - 2) continue;
            if (x - y < 1 || x - y > alpha - beta - 1) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace ebetti
