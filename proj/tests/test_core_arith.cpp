#include <numeric>

#include "doctest.h"
#include "property_checks.hpp"
#include "rotset/angle.hpp"
#include "rotset/digit_tuple.hpp"
#include "rotset/numeric.hpp"

using rotset::Angle;
using rotset::DigitTuple;
using rotset::Error;
using rotset::ErrorKind;
using rotset::Int;

namespace {

Angle frac(long long num, long long den) { return Angle::make(Int(num), Int(den)); }

DigitTuple word(int d, std::vector<int> digits) { return DigitTuple::make(d, std::move(digits)); }

}  // namespace

TEST_CASE("angle construction normalizes and reduces") {
  CHECK(frac(2, 4).str() == "1/2");
  CHECK(frac(5, 3).str() == "2/3");   // 5/3 mod 1
  CHECK(frac(-1, 3).str() == "2/3");  // negative numerators wrap
  CHECK(frac(0, 7).str() == "0/1");
  CHECK(frac(3, 3).str() == "0/1");
  CHECK(frac(8, 26).str() == "4/13");
  CHECK(frac(1, 2) == frac(2, 4));
  CHECK(frac(1, 3) < frac(1, 2));
  CHECK(frac(2, 3) > frac(1, 2));
  CHECK_THROWS_AS(Angle::make(Int(1), Int(0)), Error);
}

TEST_CASE("angle parsing accepts a/b in [0,1) only") {
  CHECK(Angle::parse("1/3") == frac(1, 3));
  CHECK(Angle::parse("118/1023") == frac(118, 1023));
  CHECK(Angle::parse("0/1") == frac(0, 1));
  CHECK(Angle::parse("8/26") == frac(4, 13));
  for (const char* bad : {"", "1", "1/", "/3", "3/3", "5/3", "a/b", "1/3/5", "-1/3", "1/0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Angle::parse(bad), Error);
  }
}

TEST_CASE("sigma multiplies the angle by d modulo 1") {
  CHECK(rotset::sigma(2, frac(1, 3)) == frac(2, 3));
  CHECK(rotset::sigma(2, frac(2, 3)) == frac(1, 3));
  CHECK(rotset::sigma(3, frac(1, 2)) == frac(1, 2));  // fixed point
  CHECK(rotset::sigma(10, frac(1, 7)) == frac(3, 7));
  CHECK(rotset::sigma(4, frac(118, 1023)) == frac(472, 1023));
  CHECK(rotset::sigma(2, frac(0, 1)) == frac(0, 1));
}

TEST_CASE("sigma_pow iterates sigma") {
  CHECK(rotset::sigma_pow(2, 0, frac(1, 3)) == frac(1, 3));
  CHECK(rotset::sigma_pow(2, 4, frac(1, 15)) == frac(1, 15));
  CHECK(rotset::sigma_pow(3, 2, frac(4, 13)) == frac(10, 13));
  Angle t = frac(7, 100);
  Angle stepped = t;
  for (int k = 0; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(rotset::sigma_pow(7, k, t) == stepped);
    stepped = rotset::sigma(7, stepped);
  }
}

TEST_CASE("digit tuple validation") {
  CHECK(word(2, {0, 1, 0}).length() == 3);
  CHECK_THROWS_AS(DigitTuple::make(1, {0}), Error);     // degree too small
  CHECK_THROWS_AS(DigitTuple::make(2, {}), Error);      // empty word
  CHECK_THROWS_AS(DigitTuple::make(2, {0, 2}), Error);  // digit out of range
  CHECK_THROWS_AS(DigitTuple::make(3, {-1}), Error);
}

TEST_CASE("common denominator is d^q - 1") {
  CHECK(rotset::common_denominator(2, 4) == 15);
  CHECK(rotset::common_denominator(3, 3) == 26);
  CHECK(rotset::common_denominator(4, 5) == 1023);
  CHECK(rotset::common_denominator(10, 3) == 999);
}

TEST_CASE("word to angle uses the d^q - 1 denominator and reduces") {
  CHECK(rotset::tuple_to_angle(word(4, {0, 1, 3, 1, 2})) == frac(118, 1023));
  CHECK(rotset::tuple_to_angle(word(2, {0, 0, 1})) == frac(1, 7));
  CHECK(rotset::tuple_to_angle(word(3, {0, 2, 2})) == frac(8, 26));
  CHECK(rotset::tuple_to_angle(word(2, {0, 1, 0, 1})) == frac(1, 3));  // 5/15 reduced
  CHECK(rotset::tuple_to_angle(word(2, {1, 1, 1, 1})) == frac(0, 1));  // wrap case
  CHECK(rotset::tuple_to_angle(word(5, {4, 4})) == frac(0, 1));
}

TEST_CASE("angle to word recovers digits and pads to the requested length") {
  CHECK(rotset::angle_to_tuple(3, 3, frac(4, 13)) == word(3, {0, 2, 2}));
  CHECK(rotset::angle_to_tuple(4, 5, frac(118, 1023)) == word(4, {0, 1, 3, 1, 2}));
  CHECK(rotset::angle_to_tuple(2, 6, frac(1, 3)) == word(2, {0, 1, 0, 1, 0, 1}));
  CHECK(rotset::angle_to_tuple(2, 4, frac(0, 1)) == word(2, {0, 0, 0, 0}));
  CHECK_THROWS_AS(rotset::angle_to_tuple(2, 3, frac(1, 3)), Error);  // 3 does not divide 7
  try {
    rotset::angle_to_tuple(2, 3, frac(1, 5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPeriodic);
  }
}

TEST_CASE("tuple shift is the cyclic left shift, with negative shifts wrapped") {
  DigitTuple t = word(2, {0, 0, 0, 1});
  CHECK(rotset::tuple_shift(t, 0) == t);
  CHECK(rotset::tuple_shift(t, 1) == word(2, {0, 0, 1, 0}));
  CHECK(rotset::tuple_shift(t, 3) == word(2, {1, 0, 0, 0}));
  CHECK(rotset::tuple_shift(t, 4) == t);
  CHECK(rotset::tuple_shift(t, 5) == word(2, {0, 0, 1, 0}));
  CHECK(rotset::tuple_shift(t, -1) == word(2, {1, 0, 0, 0}));
  CHECK(rotset::tuple_shift(t, -5) == word(2, {1, 0, 0, 0}));
}

TEST_CASE("exact period is the least shift period") {
  CHECK(rotset::exact_period(word(2, {0, 1, 0, 1})) == 2);
  CHECK(rotset::exact_period(word(3, {0, 0, 0})) == 1);
  CHECK(rotset::exact_period(word(3, {0, 1, 1})) == 3);
  CHECK(rotset::exact_period(word(2, {0, 0, 1, 0, 0, 1})) == 3);
  CHECK(rotset::exact_period(word(4, {2})) == 1);
}

TEST_CASE("tuple labels concatenate small digits and comma-join large ones") {
  CHECK(rotset::tuple_label(word(4, {0, 1, 3, 1, 2})) == "01312");
  CHECK(rotset::tuple_label(word(12, {0, 10, 3})) == "0,10,3");
}

TEST_CASE("mod_inverse matches the defining congruence") {
  CHECK(rotset::mod_inverse(2, 5) == 3);
  CHECK(rotset::mod_inverse(3, 7) == 5);
  CHECK(rotset::mod_inverse(1, 2) == 1);
  CHECK(rotset::mod_inverse(5, 6) == 5);
  try {
    rotset::mod_inverse(2, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
  }

  // Exhaustive over all moduli up to 200.
  for (std::int64_t q = 2; q <= 200; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      std::int64_t inv = rotset::mod_inverse(p, q);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(inv >= 1);
      CHECK(inv < q);
      CHECK(p * inv % q == 1);
    }
  }
}

TEST_CASE("binomial coefficients are exact") {
  CHECK(rotset::binomial(0, 0) == 1);
  CHECK(rotset::binomial(6, 2) == 15);
  CHECK(rotset::binomial(6, 3) == 20);
  CHECK(rotset::binomial(10, 2) == 45);
  CHECK(rotset::binomial(14, 2) == 91);
  CHECK(rotset::binomial(84, 4) == 1929501);
  CHECK(rotset::binomial(5, 7) == 0);
  CHECK(rotset::binomial(5, -1) == 0);
  CHECK(rotset::binomial(7, 0) == 1);
  CHECK(rotset::binomial(7, 7) == 1);

  // Pascal's rule across a range that overflows 64-bit arithmetic.
  for (int n = 1; n <= 120; n += 17) {
    for (int k = 1; k < n; k += 5) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(rotset::binomial(n, k) == rotset::binomial(n - 1, k - 1) + rotset::binomial(n - 1, k));
    }
  }
  // Symmetry.
  CHECK(rotset::binomial(100, 37) == rotset::binomial(100, 63));
}

TEST_CASE("randomized codec properties hold") {
  auto require_clean = [](const rotset_tests::PropertyResult& r) {
    CHECK(r.cases >= 2000);
    CHECK(r.failures == 0);
    if (r.failures != 0) MESSAGE(r.first_failure);
  };
  require_clean(rotset_tests::prop_round_trip(2000, 0xA1));
  require_clean(rotset_tests::prop_shift_conjugacy(2000, 0xA2));
  require_clean(rotset_tests::prop_order_agreement(2000, 0xA3));
  require_clean(rotset_tests::prop_lex_comparison(2000, 0xA4));
}
