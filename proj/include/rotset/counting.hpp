#pragma once

#include <vector>

#include "rotset/numeric.hpp"

namespace rotset {

// Number of rotational orbits of degree d with any fixed reduced rotation number
// of denominator q: C(d-2+q, d-2). Requires d >= 2, q >= 2.
Int count_orbits(int d, int q);

// N_k for k = 1..d-1 by the recursion
//   N_k = C(d-2+kq, d-2) - sum_{j<k} C(k-1, j-1) * N_j.
std::vector<Int> count_sets_recursive(int d, int q);

// N_k for k = 1..d-1 by the alternating closed form
//   N_k = sum_{j=1..k} (-1)^{k+j} C(k-1, j-1) C(d-2+jq, d-2).
std::vector<Int> count_sets_closed(int d, int q);

// Exact check that the m x m lower-triangular matrices L = (C(i-1, j-1)) and
// L' = ((-1)^{i+j} C(i-1, j-1)) are mutually inverse. Requires m >= 1.
bool binomial_inversion_check(int m);

}  // namespace rotset
