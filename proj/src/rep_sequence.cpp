#include "rotset/rep_sequence.hpp"

#include <algorithm>

namespace rotset {

RepSequence RepSequence::make(int degree, std::vector<int> terms) {
  if (degree < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (terms.empty()) fail(ErrorKind::InvalidSequence, "rep sequence must be nonempty");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] < 0 || terms[i] > degree - 2) {
      fail(ErrorKind::InvalidSequence,
           "term " + std::to_string(terms[i]) + " out of range [0, " + std::to_string(degree - 2) + "]");
    }
    if (i > 0 && terms[i - 1] > terms[i]) {
      fail(ErrorKind::InvalidSequence, "rep sequence terms must be nondecreasing");
    }
  }
  RepSequence rep;
  rep.degree = degree;
  rep.terms = std::move(terms);
  return rep;
}

bool lex_less(const RepSequence& a, const RepSequence& b) {
  if (a.degree != b.degree || a.length() != b.length()) {
    fail(ErrorKind::MixedParameters, "rep sequences have different degree or length");
  }
  return a.terms < b.terms;
}

std::vector<RepSequence> enumerate_rep_sequences(int d, int q) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (q < 2) fail(ErrorKind::InvalidArgument, "length must be at least 2");
  std::vector<RepSequence> out;
  std::vector<int> cur(q, 0);
  while (true) {
    out.push_back(RepSequence::make(d, cur));
    // Successor: bump the rightmost term below d-2, then level the tail.
    int i = q - 1;
    while (i >= 0 && cur[i] == d - 2) --i;
    if (i < 0) break;
    int v = cur[i] + 1;
    for (int j = i; j < q; ++j) cur[j] = v;
  }
  return out;
}

bool can_interlace(const std::vector<RepSequence>& reps) {
  if (reps.empty()) fail(ErrorKind::InvalidArgument, "can_interlace requires a nonempty list");
  for (const auto& rep : reps) {
    if (rep.degree != reps[0].degree || rep.length() != reps[0].length()) {
      fail(ErrorKind::MixedParameters, "rep sequences have different degree or length");
    }
  }
  int n = static_cast<int>(reps.size());
  if (n == 1) return true;
  std::vector<RepSequence> sorted = reps;
  std::sort(sorted.begin(), sorted.end(),
            [](const RepSequence& a, const RepSequence& b) { return a.terms < b.terms; });
  for (int i = 0; i + 1 < n; ++i) {
    if (sorted[i] == sorted[i + 1]) return false;  // pairwise distinct is required
  }
  int q = reps[0].length();
  int prev = -1;
  for (int j = 0; j < q; ++j) {
    for (int i = 0; i < n; ++i) {
      int v = sorted[i].terms[j];
      if (v < prev) return false;
      prev = v;
    }
  }
  return true;
}

std::string rep_label(const RepSequence& rep) {
  std::string label;
  for (int i = 0; i < rep.length(); ++i) {
    if (rep.degree > 10 && i > 0) label += ',';
    label += std::to_string(rep.terms[i]);
  }
  return label;
}

}  // namespace rotset
