#include "rotset/numeric.hpp"

#include <algorithm>
#include <utility>

namespace rotset {

std::int64_t mod_inverse(std::int64_t p, std::int64_t q) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "mod_inverse requires q >= 2");
  if (p < 1 || p >= q) fail(ErrorKind::InvalidArgument, "mod_inverse requires 1 <= p < q");
  // Extended Euclid on (p, q), tracking only the coefficient of p.
  std::int64_t old_r = p, r = q;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quo = old_r / r;
    old_r -= quo * r;
    std::swap(old_r, r);
    old_s -= quo * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    fail(ErrorKind::NotCoprime, "mod_inverse requires gcd(p, q) = 1, got gcd = " + std::to_string(old_r));
  }
  std::int64_t inv = old_s % q;
  if (inv < 0) inv += q;
  return inv;
}

Int binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  // Each partial product of i consecutive integers is divisible by i!.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace rotset
