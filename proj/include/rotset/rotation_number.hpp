#pragma once

#include <string>

#include "rotset/numeric.hpp"

namespace rotset {

// A reduced rotation number p/q with 1 <= p < q and gcd(p, q) = 1,
// caching p_star = p^{-1} mod q.
struct RotationNumber {
  int p = 1;
  int q = 2;
  int p_star = 1;

  // Requires p/q already reduced; throws NotCoprime otherwise.
  static RotationNumber make(int p, int q);

  // Reduces p_raw/size first, then validates. Requires 1 <= p_raw < size.
  static RotationNumber reduce(int p_raw, int size);

  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

  friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
};

}  // namespace rotset
