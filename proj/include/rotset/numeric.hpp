#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "rotset/errors.hpp"

namespace rotset {

// Exact arbitrary-precision integer used for numerators, denominators and counts.
using Int = boost::multiprecision::cpp_int;

// Multiplicative inverse of p modulo q, normalized to [1, q).
// Requires q >= 2 and 1 <= p < q; throws NotCoprime when gcd(p, q) != 1.
std::int64_t mod_inverse(std::int64_t p, std::int64_t q);

// Exact binomial coefficient C(n, k). Requires n >= 0; returns 0 when k < 0 or k > n.
Int binomial(std::int64_t n, std::int64_t k);

}  // namespace rotset
