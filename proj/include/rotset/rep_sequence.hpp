#pragma once

#include <string>
#include <vector>

#include "rotset/errors.hpp"

namespace rotset {

// A nondecreasing word (b_0, ..., b_{q-1}) over {0, ..., d-2}, the canonical
// representative of one rotational orbit of degree d and denominator q.
struct RepSequence {
  int degree = 2;
  std::vector<int> terms;  // nondecreasing, each in [0, d-2]

  // Validates the invariants above; throws InvalidSequence on violation.
  static RepSequence make(int degree, std::vector<int> terms);

  int length() const { return static_cast<int>(terms.size()); }

  friend bool operator==(const RepSequence&, const RepSequence&) = default;
};

// Lexicographic order on rep sequences of the same shape.
bool lex_less(const RepSequence& a, const RepSequence& b);

// All rep sequences of degree d and length q in lexicographic order.
// Count = C(d-2+q, d-2). Requires d >= 2 and q >= 2.
std::vector<RepSequence> enumerate_rep_sequences(int d, int q);

// True iff the reps are pairwise distinct and, sorted lexicographically, the
// column-major merge b_0^(1)..b_0^(n), b_1^(1)..b_1^(n), ... is nondecreasing.
// A single rep always interlaces. Throws MixedParameters on shape mismatch.
bool can_interlace(const std::vector<RepSequence>& reps);

// Terms joined for display: concatenated when d <= 10 ("0001"), comma-joined otherwise.
std::string rep_label(const RepSequence& rep);

}  // namespace rotset
