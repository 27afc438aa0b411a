#include "rotset/counting.hpp"

namespace rotset {

namespace {

void validate(int d, int q) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (q < 2) fail(ErrorKind::InvalidArgument, "denominator must be at least 2");
}

}  // namespace

Int count_orbits(int d, int q) {
  validate(d, q);
  return binomial(d - 2 + q, d - 2);
}

std::vector<Int> count_sets_recursive(int d, int q) {
  validate(d, q);
  std::vector<Int> counts;
  counts.reserve(d - 1);
  for (int k = 1; k <= d - 1; ++k) {
    Int value = binomial(d - 2 + static_cast<std::int64_t>(k) * q, d - 2);
    for (int j = 1; j < k; ++j) {
      value -= binomial(k - 1, j - 1) * counts[j - 1];
    }
    counts.push_back(value);
  }
  return counts;
}

std::vector<Int> count_sets_closed(int d, int q) {
  validate(d, q);
  std::vector<Int> counts;
  counts.reserve(d - 1);
  for (int k = 1; k <= d - 1; ++k) {
    Int value = 0;
    for (int j = 1; j <= k; ++j) {
      Int term = binomial(k - 1, j - 1) * binomial(d - 2 + static_cast<std::int64_t>(j) * q, d - 2);
      if ((k + j) % 2 == 0) {
        value += term;
      } else {
        value -= term;
      }
    }
    counts.push_back(value);
  }
  return counts;
}

bool binomial_inversion_check(int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "binomial_inversion_check requires m >= 1");
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      Int entry = 0;
      for (int l = 1; l <= m; ++l) {
        Int term = binomial(i - 1, l - 1) * binomial(l - 1, j - 1);
        if ((l + j) % 2 == 0) {
          entry += term;
        } else {
          entry -= term;
        }
      }
      if (entry != ((i == j) ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace rotset
