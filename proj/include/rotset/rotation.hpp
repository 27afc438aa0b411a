#pragma once

#include <optional>
#include <vector>

#include "rotset/digit_tuple.hpp"
#include "rotset/rotation_number.hpp"

namespace rotset {

// Raw shift of a finite invariant set: the map advances sorted position i to i + p_raw (mod size).
struct ShiftDescriptor {
  int p_raw = 0;
  int size = 0;

  friend bool operator==(const ShiftDescriptor&, const ShiftDescriptor&) = default;
};

// Decides whether the angle-multiplying map permutes the set by a constant nonzero
// position shift. The candidate shift comes from the least element's image; every
// element is then checked. Fixed points (shift 0), images outside the set, and
// singletons all yield absent. Duplicate inputs are treated as one point.
std::optional<ShiftDescriptor> detect_rotation(int d, std::vector<Angle> angles);

// A single rotational orbit: q distinct angles cyclically permuted with a reduced
// shift p, identified by its least element.
struct RotationalOrbit {
  int degree = 2;
  RotationNumber rotation;
  std::vector<Angle> angles;  // sorted ascending
  DigitTuple least_tuple;     // word of angles[0]; exact period equals q
};

// Validates one orbit. Throws NotRotational when no shift exists and NotSingleOrbit
// when gcd(p_raw, size) > 1. Also asserts that iterating the map p_star times
// advances the sorted list by exactly one position.
RotationalOrbit verify_orbit(int d, std::vector<Angle> angles);

// A rotational set: a disjoint union of n interlaced orbits sharing one reduced
// rotation number.
struct RotationalSet {
  int degree = 2;
  ShiftDescriptor raw_shift;
  RotationNumber reduced_rotation;
  int orbit_count = 1;
  std::vector<Angle> angles;           // sorted ascending, size = n * q
  std::vector<RotationalOrbit> orbits; // sorted by least element
};

// Validates a rotational set: detects the raw shift, splits the set into orbits by
// iterating the map, verifies each orbit against the reduced rotation number, and
// checks that any n cyclically consecutive angles lie in n distinct orbits.
RotationalSet verify_set(int d, std::vector<Angle> angles);

// True iff t is the least element of a rotational orbit with the given rotation
// number: the digits reordered by k |-> (k * p_star mod q) must be nondecreasing
// with a strict increase exactly between positions q-p-1 and q-p.
// Throws LengthMismatch when t.length() != rot.q.
bool check_least_condition(const DigitTuple& t, const RotationNumber& rot);

// True iff some preimage of 0 (a point j/d, 1 <= j <= d-1) lies strictly between
// s and t. Requires s < t.
bool zero_preimage_between(int d, const Angle& s, const Angle& t);

}  // namespace rotset
