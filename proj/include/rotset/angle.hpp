#pragma once

#include <string>

#include "rotset/numeric.hpp"

namespace rotset {

// A point of the circle R/Z stored as a reduced fraction num/den with 0 <= num < den.
// Immutable after construction; the zero point is 0/1.
class Angle {
 public:
  Angle() = default;

  // Normalizes the numerator modulo the denominator, then reduces.
  // Requires denominator > 0.
  static Angle make(Int numerator, Int denominator);

  // Parses "a/b" with decimal a, b and a/b in [0, 1). Throws ParseError.
  static Angle parse(const std::string& text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  std::string str() const { return num_.str() + "/" + den_.str(); }

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }
  friend bool operator<(const Angle& a, const Angle& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Angle& a, const Angle& b) { return !(b < a); }
  friend bool operator>(const Angle& a, const Angle& b) { return b < a; }
  friend bool operator>=(const Angle& a, const Angle& b) { return !(a < b); }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

// The angle-multiplying map: t |-> d * t (mod 1). Requires d >= 2.
Angle sigma(int d, const Angle& t);

// k-fold iterate of sigma, computed as d^k * t (mod 1). Requires d >= 2 and k >= 0.
Angle sigma_pow(int d, std::int64_t k, const Angle& t);

}  // namespace rotset
