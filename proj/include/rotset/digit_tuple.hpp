#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotset/angle.hpp"

namespace rotset {

// A base-d digit word (a_0, ..., a_{q-1}) naming the periodic point
// 0.(a_0 a_1 ... a_{q-1})... = (sum a_i d^{q-1-i}) / (d^q - 1) of the circle.
// The angle-multiplying map acts on words as a cyclic left shift.
struct DigitTuple {
  int degree = 2;           // d >= 2
  std::vector<int> digits;  // length >= 1, each digit in [0, d-1]

  // Validates the invariants above; throws InvalidArgument on violation.
  static DigitTuple make(int degree, std::vector<int> digits);

  int length() const { return static_cast<int>(digits.size()); }

  friend bool operator==(const DigitTuple&, const DigitTuple&) = default;
};

// Lexicographic order on digit words of the same shape (degree and length).
bool lex_less(const DigitTuple& a, const DigitTuple& b);

// d^q - 1, the common denominator of all q-periodic points of degree d.
Int common_denominator(int d, int q);

// Word -> point of the circle. The all-(d-1) word wraps to 0/1 (0.999... = 1 on R/Z).
Angle tuple_to_angle(const DigitTuple& t);

// Point -> word of length q. Throws NotPeriodic unless t * (d^q - 1) is an integer.
DigitTuple angle_to_tuple(int d, int q, const Angle& t);

// Cyclic left shift by k positions; k may be negative and is reduced mod q.
DigitTuple tuple_shift(const DigitTuple& t, std::int64_t k);

// Smallest divisor q' of the length with tuple_shift(t, q') == t.
int exact_period(const DigitTuple& t);

// Digits joined for display: concatenated when d <= 10 ("0132"), comma-joined otherwise.
std::string tuple_label(const DigitTuple& t);

}  // namespace rotset
