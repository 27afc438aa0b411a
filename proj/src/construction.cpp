#include "rotset/construction.hpp"

#include <algorithm>

namespace rotset {

DigitTuple rep_to_least_tuple(const RepSequence& rep, const RotationNumber& rot) {
  int q = rot.q;
  if (rep.length() != q) {
    fail(ErrorKind::LengthMismatch, "rep length " + std::to_string(rep.length()) +
                                        " does not match rotation denominator " + std::to_string(q));
  }
  std::vector<int> digits(q, 0);
  for (int k = 0; k < q; ++k) {
    int c = rep.terms[k] + (k >= q - rot.p ? 1 : 0);
    digits[static_cast<int>(static_cast<std::int64_t>(k) * rot.p_star % q)] = c;
  }
  DigitTuple t = DigitTuple::make(rep.degree, std::move(digits));
  if (!check_least_condition(t, rot)) {
    fail(ErrorKind::InternalError, "constructed tuple fails the least-element condition");
  }
  return t;
}

RepSequence least_tuple_to_rep(const DigitTuple& t, const RotationNumber& rot) {
  int q = rot.q;
  if (t.length() != q) {
    fail(ErrorKind::LengthMismatch, "tuple length " + std::to_string(t.length()) +
                                        " does not match rotation denominator " + std::to_string(q));
  }
  if (!check_least_condition(t, rot)) {
    fail(ErrorKind::NotLeastElement,
         "tuple is not the least element of a rotational orbit with rotation " + rot.str());
  }
  std::vector<int> terms(q, 0);
  for (int k = 0; k < q; ++k) {
    int c = t.digits[static_cast<int>(static_cast<std::int64_t>(k) * rot.p_star % q)];
    terms[k] = c - (k >= q - rot.p ? 1 : 0);
  }
  return RepSequence::make(t.degree, std::move(terms));
}

RotationalOrbit orbit_from_rep(const RepSequence& rep, const RotationNumber& rot) {
  DigitTuple least = rep_to_least_tuple(rep, rot);
  int q = rot.q;
  if (exact_period(least) != q) {
    fail(ErrorKind::InternalPeriodViolation,
         "constructed tuple has period " + std::to_string(exact_period(least)) +
             " smaller than " + std::to_string(q));
  }
  std::vector<Angle> angles;
  angles.reserve(q);
  for (int k = 0; k < q; ++k) {
    angles.push_back(tuple_to_angle(tuple_shift(least, k)));
  }
  RotationalOrbit orbit = verify_orbit(rep.degree, std::move(angles));
  if (orbit.rotation != rot) {
    fail(ErrorKind::InternalError, "constructed orbit has rotation " + orbit.rotation.str() +
                                       ", expected " + rot.str());
  }
  if (orbit.least_tuple != least) {
    fail(ErrorKind::InternalError, "constructed tuple is not the least element of its orbit");
  }
  return orbit;
}

RotationalSet set_from_reps(const std::vector<RepSequence>& reps, const RotationNumber& rot) {
  if (reps.empty()) fail(ErrorKind::InvalidArgument, "set_from_reps requires a nonempty list");
  std::vector<RepSequence> sorted = reps;
  std::sort(sorted.begin(), sorted.end(),
            [](const RepSequence& a, const RepSequence& b) { return a.terms < b.terms; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1]) {
      fail(ErrorKind::DuplicateOrbit, "rep sequence " + rep_label(sorted[i]) + " appears twice");
    }
  }
  if (!can_interlace(reps)) {
    fail(ErrorKind::NotInterlaceable, "the orbits of these rep sequences cannot be interlaced");
  }
  std::vector<Angle> all;
  all.reserve(reps.size() * rot.q);
  for (const auto& rep : reps) {
    RotationalOrbit orbit = orbit_from_rep(rep, rot);
    all.insert(all.end(), orbit.angles.begin(), orbit.angles.end());
  }
  RotationalSet set = verify_set(reps[0].degree, std::move(all));
  if (set.orbit_count != static_cast<int>(reps.size())) {
    fail(ErrorKind::InternalError, "verified set has an unexpected orbit count");
  }
  if (set.reduced_rotation != rot) {
    fail(ErrorKind::InternalError, "verified set has rotation " + set.reduced_rotation.str() +
                                       ", expected " + rot.str());
  }
  return set;
}

}  // namespace rotset
