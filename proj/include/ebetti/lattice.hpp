#pragma once

namespace ebetti {

// Counts of integer points in two families of planar boxes cut by diagonal
// strips. Each count has a parity-split closed form and a direct double-loop
// evaluation; the two must agree everywhere (see the test suite).

/// Integer (x, y) with 0 < x < a-1, 0 < y < a-1, b <= x+y <= 2a-b-2,
/// b+1-a <= x-y <= a-b-1. Requires a > b >= 1.
long long sol1_closed(int alpha, int beta);
long long sol1_brute(int alpha, int beta);

/// Integer (x, y) with 0 < x < a-1, 0 < y < b-1, b <= x+y <= a-2,
/// 1 <= x-y <= a-b-1. Requires b > 1 and a >= b+2.
long long sol2_closed(int alpha, int beta);
long long sol2_brute(int alpha, int beta);

}  // namespace ebetti
