#pragma once

#include "rotset/rep_sequence.hpp"
#include "rotset/rotation.hpp"

namespace rotset {

// Rep sequence -> least tuple of its orbit: add 1 to the last p terms, then place
// term k at digit position (k * p_star) mod q. Throws LengthMismatch when the
// lengths disagree. The result always passes check_least_condition.
DigitTuple rep_to_least_tuple(const RepSequence& rep, const RotationNumber& rot);

// Inverse of rep_to_least_tuple. Throws NotLeastElement unless t passes
// check_least_condition for rot.
RepSequence least_tuple_to_rep(const DigitTuple& t, const RotationNumber& rot);

// Builds and verifies the full orbit of a rep sequence. Throws
// InternalPeriodViolation if the constructed tuple had period < q (never expected).
RotationalOrbit orbit_from_rep(const RepSequence& rep, const RotationNumber& rot);

// Builds and verifies the rotational set that is the union of the reps' orbits.
// Throws DuplicateOrbit on repeated reps and NotInterlaceable when the reps
// cannot be interlaced.
RotationalSet set_from_reps(const std::vector<RepSequence>& reps, const RotationNumber& rot);

}  // namespace rotset
