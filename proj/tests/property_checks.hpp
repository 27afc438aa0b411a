#pragma once

// Randomized property checks shared by the unit and acceptance suites.
// Every run is deterministic: callers pass a fixed seed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rotset/construction.hpp"

namespace rotset_tests {

struct PropertyResult {
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& describe) {
    ++cases;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = describe;
    }
  }
};

inline std::vector<int> random_digits(std::mt19937_64& rng, int count, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<int> digits(count);
  for (auto& v : digits) v = dist(rng);
  return digits;
}

// A random digit tuple, optionally excluding the all-(d-1) word (which names the
// same circle point as the all-0 word, so the codec cannot round-trip it).
inline rotset::DigitTuple random_tuple(std::mt19937_64& rng, int d, int q, bool exclude_top) {
  while (true) {
    std::vector<int> digits = random_digits(rng, q, 0, d - 1);
    if (exclude_top) {
      bool top = true;
      for (int v : digits) {
        if (v != d - 1) {
          top = false;
          break;
        }
      }
      if (top) continue;
    }
    return rotset::DigitTuple::make(d, std::move(digits));
  }
}

inline std::string tuple_note(const rotset::DigitTuple& t) {
  std::string out = "d=" + std::to_string(t.degree) + " digits ";
  for (int v : t.digits) out += std::to_string(v) + ",";
  return out;
}

// Word -> angle -> word is the identity (all words except the excluded wrap case).
inline PropertyResult prop_round_trip(long long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d_dist(2, 10);
  std::uniform_int_distribution<int> q_dist(1, 12);
  PropertyResult result;
  for (long long i = 0; i < cases; ++i) {
    int d = d_dist(rng), q = q_dist(rng);
    rotset::DigitTuple t = random_tuple(rng, d, q, true);
    rotset::DigitTuple back = rotset::angle_to_tuple(d, q, rotset::tuple_to_angle(t));
    result.record(back == t, "round trip failed for " + tuple_note(t));
  }
  return result;
}

// Shifting the word k places matches applying the map k times to its angle,
// and negative shifts agree with their positive residues.
inline PropertyResult prop_shift_conjugacy(long long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d_dist(2, 10);
  std::uniform_int_distribution<int> q_dist(1, 12);
  PropertyResult result;
  for (long long i = 0; i < cases; ++i) {
    int d = d_dist(rng), q = q_dist(rng);
    rotset::DigitTuple t = random_tuple(rng, d, q, false);
    int k = std::uniform_int_distribution<int>(0, q - 1)(rng);
    bool conjugate = rotset::tuple_to_angle(rotset::tuple_shift(t, k)) ==
                     rotset::sigma_pow(d, k, rotset::tuple_to_angle(t));
    bool negatives = rotset::tuple_shift(t, -k) == rotset::tuple_shift(t, q - k);
    result.record(conjugate && negatives,
                  "shift conjugacy failed for " + tuple_note(t) + " k=" + std::to_string(k));
  }
  return result;
}

// Lexicographic order on words of one shape agrees with angle order.
inline PropertyResult prop_order_agreement(long long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d_dist(2, 10);
  std::uniform_int_distribution<int> q_dist(1, 12);
  PropertyResult result;
  for (long long i = 0; i < cases; ++i) {
    int d = d_dist(rng), q = q_dist(rng);
    rotset::DigitTuple a = random_tuple(rng, d, q, true);
    rotset::DigitTuple b = random_tuple(rng, d, q, true);
    bool same_order = rotset::lex_less(a, b) == (rotset::tuple_to_angle(a) < rotset::tuple_to_angle(b));
    bool same_equal = (a == b) == (rotset::tuple_to_angle(a) == rotset::tuple_to_angle(b));
    result.record(same_order && same_equal,
                  "order agreement failed for " + tuple_note(a) + " vs " + tuple_note(b));
  }
  return result;
}

// If a_i <= b_i everywhere except possibly position m (m != 0) and a_{m-1} < b_{m-1},
// then a precedes b strictly, as a word and as an angle.
inline PropertyResult prop_lex_comparison(long long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d_dist(2, 10);
  std::uniform_int_distribution<int> q_dist(2, 12);
  PropertyResult result;
  for (long long i = 0; i < cases; ++i) {
    int d = d_dist(rng), q = q_dist(rng);
    int m = std::uniform_int_distribution<int>(1, q - 1)(rng);
    std::vector<int> b_digits = random_digits(rng, q, 0, d - 1);
    if (b_digits[m - 1] == 0) b_digits[m - 1] = std::uniform_int_distribution<int>(1, d - 1)(rng);
    std::vector<int> a_digits(q);
    for (int j = 0; j < q; ++j) {
      if (j == m) {
        a_digits[j] = std::uniform_int_distribution<int>(0, d - 1)(rng);
      } else if (j == m - 1) {
        a_digits[j] = std::uniform_int_distribution<int>(0, b_digits[j] - 1)(rng);
      } else {
        a_digits[j] = std::uniform_int_distribution<int>(0, b_digits[j])(rng);
      }
    }
    rotset::DigitTuple a = rotset::DigitTuple::make(d, a_digits);
    rotset::DigitTuple b = rotset::DigitTuple::make(d, b_digits);
    bool word_strict = rotset::lex_less(a, b);
    bool top = true;
    for (int v : b.digits) {
      if (v != d - 1) {
        top = false;
        break;
      }
    }
    bool angle_strict = top || rotset::tuple_to_angle(a) < rotset::tuple_to_angle(b);
    result.record(word_strict && angle_strict,
                  "lex comparison failed for " + tuple_note(a) + " vs " + tuple_note(b));
  }
  return result;
}

// For points s < t of verified orbits, the first digits satisfy a_0 < b_0 exactly
// when some preimage of 0 lies strictly between s and t.
inline PropertyResult prop_separation(long long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d_dist(2, 6);
  PropertyResult result;
  for (long long i = 0; i < cases; ++i) {
    int d = d_dist(rng);
    int q = std::uniform_int_distribution<int>(2, 6)(rng);
    int p = std::uniform_int_distribution<int>(1, q - 1)(rng);
    if (std::gcd(p, q) != 1) {
      --i;
      continue;
    }
    rotset::RotationNumber rot = rotset::RotationNumber::make(p, q);
    auto rep1 = rotset::RepSequence::make(d, [&] {
      auto terms = random_digits(rng, q, 0, d - 2);
      std::sort(terms.begin(), terms.end());
      return terms;
    }());
    auto rep2 = rotset::RepSequence::make(d, [&] {
      auto terms = random_digits(rng, q, 0, d - 2);
      std::sort(terms.begin(), terms.end());
      return terms;
    }());
    rotset::RotationalOrbit o1 = rotset::orbit_from_rep(rep1, rot);
    rotset::RotationalOrbit o2 = rotset::orbit_from_rep(rep2, rot);
    rotset::Angle s = o1.angles[std::uniform_int_distribution<int>(0, q - 1)(rng)];
    rotset::Angle t = o2.angles[std::uniform_int_distribution<int>(0, q - 1)(rng)];
    if (s == t) {
      --i;
      continue;
    }
    if (t < s) std::swap(s, t);
    int a0 = rotset::angle_to_tuple(d, q, s).digits[0];
    int b0 = rotset::angle_to_tuple(d, q, t).digits[0];
    bool separated = rotset::zero_preimage_between(d, s, t);
    result.record((a0 < b0) == separated,
                  "separation predicate failed for " + s.str() + " vs " + t.str() + " d=" +
                      std::to_string(d));
  }
  return result;
}

}  // namespace rotset_tests
