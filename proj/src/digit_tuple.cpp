#include "rotset/digit_tuple.hpp"

#include <algorithm>

namespace rotset {

DigitTuple DigitTuple::make(int degree, std::vector<int> digits) {
  if (degree < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (digits.empty()) fail(ErrorKind::InvalidArgument, "digit tuple must be nonempty");
  for (int digit : digits) {
    if (digit < 0 || digit >= degree) {
      fail(ErrorKind::InvalidArgument,
           "digit " + std::to_string(digit) + " out of range [0, " + std::to_string(degree - 1) + "]");
    }
  }
  DigitTuple t;
  t.degree = degree;
  t.digits = std::move(digits);
  return t;
}

bool lex_less(const DigitTuple& a, const DigitTuple& b) {
  if (a.degree != b.degree || a.length() != b.length()) {
    fail(ErrorKind::InvalidArgument, "lex_less requires tuples of the same degree and length");
  }
  return a.digits < b.digits;
}

Int common_denominator(int d, int q) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (q < 1) fail(ErrorKind::InvalidArgument, "length must be at least 1");
  return boost::multiprecision::pow(Int(d), static_cast<unsigned>(q)) - 1;
}

Angle tuple_to_angle(const DigitTuple& t) {
  Int numerator = 0;
  for (int digit : t.digits) {
    numerator = numerator * t.degree + digit;
  }
  // Angle::make reduces numerator mod d^q - 1, which folds the all-(d-1) word onto 0/1.
  return Angle::make(numerator, common_denominator(t.degree, t.length()));
}

DigitTuple angle_to_tuple(int d, int q, const Angle& t) {
  Int denom = common_denominator(d, q);
  if (denom % t.den() != 0) {
    fail(ErrorKind::NotPeriodic,
         "angle " + t.str() + " is not periodic with period dividing " + std::to_string(q) +
             " under degree " + std::to_string(d));
  }
  Int numerator = t.num() * (denom / t.den());
  std::vector<int> digits(q, 0);
  for (int i = q - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(numerator % d);
    numerator /= d;
  }
  return DigitTuple::make(d, std::move(digits));
}

DigitTuple tuple_shift(const DigitTuple& t, std::int64_t k) {
  int q = t.length();
  int r = static_cast<int>(((k % q) + q) % q);
  std::vector<int> digits(t.digits.begin() + r, t.digits.end());
  digits.insert(digits.end(), t.digits.begin(), t.digits.begin() + r);
  return DigitTuple::make(t.degree, std::move(digits));
}

int exact_period(const DigitTuple& t) {
  int q = t.length();
  for (int r = 1; r <= q; ++r) {
    if (q % r != 0) continue;
    bool fixed = true;
    for (int i = 0; i < q && fixed; ++i) {
      fixed = t.digits[i] == t.digits[(i + r) % q];
    }
    if (fixed) return r;
  }
  return q;  // unreachable: r = q always fixes the tuple
}

std::string tuple_label(const DigitTuple& t) {
  std::string label;
  for (int i = 0; i < t.length(); ++i) {
    if (t.degree > 10 && i > 0) label += ',';
    label += std::to_string(t.digits[i]);
  }
  return label;
}

}  // namespace rotset
