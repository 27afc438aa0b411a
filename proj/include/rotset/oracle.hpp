#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotset/rotation.hpp"

namespace rotset {

// Size guards for the brute-force scans.
struct OracleBounds {
  std::int64_t max_denominator = std::int64_t{1} << 24;  // largest allowed d^q - 1
  std::int64_t max_subsets = 1'000'000;                  // largest allowed C(#orbits, k) per k
};

// Outcome of a full cross-check for one (d, p, q).
struct OracleReport {
  int d = 2;
  int p = 1;
  int q = 2;
  std::int64_t orbits_found = 0;
  std::vector<std::int64_t> sets_found_by_k;  // k = 1..d-1
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Scans every numerator over d^q - 1, keeps the cycles of exact length q whose
// sorted angles are advanced by exactly p positions, and returns the verified
// orbits sorted by least element. Throws BoundExceeded when d^q - 1 exceeds the
// denominator bound.
std::vector<RotationalOrbit> brute_force_orbits(int d, const RotationNumber& rot,
                                                const OracleBounds& bounds = {});

// Tests every k-subset of the brute-force orbits for being a rotational set and
// returns the verified sets sorted by their angle lists. Throws BoundExceeded
// when C(#orbits, k) exceeds the subset bound.
std::vector<RotationalSet> brute_force_sets(int d, const RotationNumber& rot, int k,
                                            const OracleBounds& bounds = {});

// Compares the constructive enumeration (rep sequences, cliques, counting
// formulas) against the brute-force scans, element by element, and records every
// disagreement.
OracleReport cross_check(int d, const RotationNumber& rot, const OracleBounds& bounds = {});

}  // namespace rotset
