#include "rotset/rotation.hpp"

#include <algorithm>
#include <numeric>

namespace rotset {

namespace {

void sort_unique(std::vector<Angle>& angles) {
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
}

// Index of value in a sorted vector, or -1 when absent.
int sorted_index_of(const std::vector<Angle>& sorted, const Angle& value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

std::optional<ShiftDescriptor> detect_rotation(int d, std::vector<Angle> angles) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (angles.empty()) fail(ErrorKind::InvalidArgument, "detect_rotation requires a nonempty set");
  sort_unique(angles);
  int size = static_cast<int>(angles.size());
  int shift = sorted_index_of(angles, sigma(d, angles[0]));
  if (shift <= 0) return std::nullopt;
  for (int i = 0; i < size; ++i) {
    if (sigma(d, angles[i]) != angles[(i + shift) % size]) return std::nullopt;
  }
  return ShiftDescriptor{shift, size};
}

RotationalOrbit verify_orbit(int d, std::vector<Angle> angles) {
  sort_unique(angles);
  auto det = detect_rotation(d, angles);
  if (!det) fail(ErrorKind::NotRotational, "the set is not permuted by a constant nonzero shift");
  if (std::gcd(det->p_raw, det->size) != 1) {
    fail(ErrorKind::NotSingleOrbit,
         "shift " + std::to_string(det->p_raw) + " over size " + std::to_string(det->size) +
             " has gcd > 1; the set splits into several orbits");
  }
  RotationNumber rot = RotationNumber::make(det->p_raw, det->size);
  int q = rot.q;
  // Iterating the map p_star times must advance the sorted list by one position.
  for (int i = 0; i < q; ++i) {
    if (sigma_pow(d, rot.p_star, angles[i]) != angles[(i + 1) % q]) {
      fail(ErrorKind::InternalError, "p_star-fold iterate does not advance the orbit by one");
    }
  }
  DigitTuple least = angle_to_tuple(d, q, angles[0]);
  if (exact_period(least) != q) {
    fail(ErrorKind::InternalError, "least element has period smaller than the orbit size");
  }
  RotationalOrbit orbit;
  orbit.degree = d;
  orbit.rotation = rot;
  orbit.angles = std::move(angles);
  orbit.least_tuple = std::move(least);
  return orbit;
}

RotationalSet verify_set(int d, std::vector<Angle> angles) {
  sort_unique(angles);
  auto det = detect_rotation(d, angles);
  if (!det) fail(ErrorKind::NotRotational, "the set is not permuted by a constant nonzero shift");
  int size = det->size;
  int n = std::gcd(det->p_raw, size);
  RotationNumber reduced = RotationNumber::reduce(det->p_raw, size);

  // Partition into orbits by iterating the map; labels follow first appearance,
  // so orbit ids are ordered by least element.
  std::vector<int> label(size, -1);
  int orbit_count = 0;
  for (int i = 0; i < size; ++i) {
    if (label[i] != -1) continue;
    int id = orbit_count++;
    int j = i;
    while (label[j] == -1) {
      label[j] = id;
      j = sorted_index_of(angles, sigma(d, angles[j]));
      if (j < 0) fail(ErrorKind::InternalError, "orbit iteration left the set");
    }
  }
  if (orbit_count != n) {
    fail(ErrorKind::InternalError, "orbit partition size disagrees with gcd(p_raw, size)");
  }

  std::vector<std::vector<Angle>> members(n);
  for (int i = 0; i < size; ++i) members[label[i]].push_back(angles[i]);

  std::vector<RotationalOrbit> orbits;
  orbits.reserve(n);
  for (auto& m : members) {
    RotationalOrbit orbit = verify_orbit(d, std::move(m));
    if (orbit.rotation != reduced) {
      fail(ErrorKind::InternalError, "orbit rotation disagrees with the reduced rotation of the set");
    }
    orbits.push_back(std::move(orbit));
  }

  // Interlacing: every n cyclically consecutive angles lie in n distinct orbits.
  for (int w = 0; w < size; ++w) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (label[(w + a) % size] == label[(w + b) % size]) {
          fail(ErrorKind::InternalError, "orbits are not interlaced");
        }
      }
    }
  }

  RotationalSet set;
  set.degree = d;
  set.raw_shift = *det;
  set.reduced_rotation = reduced;
  set.orbit_count = n;
  set.angles = std::move(angles);
  set.orbits = std::move(orbits);
  return set;
}

bool check_least_condition(const DigitTuple& t, const RotationNumber& rot) {
  int q = rot.q;
  if (t.length() != q) {
    fail(ErrorKind::LengthMismatch, "tuple length " + std::to_string(t.length()) +
                                        " does not match rotation denominator " + std::to_string(q));
  }
  for (int k = 0; k + 1 < q; ++k) {
    int cur = t.digits[static_cast<int>(static_cast<std::int64_t>(k) * rot.p_star % q)];
    int nxt = t.digits[static_cast<int>(static_cast<std::int64_t>(k + 1) * rot.p_star % q)];
    if (k == q - rot.p - 1) {
      if (cur >= nxt) return false;  // the single strict step
    } else if (cur > nxt) {
      return false;
    }
  }
  return true;
}

bool zero_preimage_between(int d, const Angle& s, const Angle& t) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (!(s < t)) fail(ErrorKind::InvalidArgument, "zero_preimage_between requires s < t");
  // Smallest j with j/d > s.
  Int j = s.num() * d / s.den() + 1;
  if (j > d - 1) return false;
  return j * t.den() < t.num() * d;
}

}  // namespace rotset
