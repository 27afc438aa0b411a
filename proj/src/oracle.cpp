#include "rotset/oracle.hpp"

#include <algorithm>
#include <limits>

#include "rotset/counting.hpp"
#include "rotset/interlacing_graph.hpp"

namespace rotset {

namespace {

// d^q - 1 as int64, guarded so that d * numerator never overflows.
std::int64_t checked_denominator(int d, int q, const OracleBounds& bounds) {
  Int denom = common_denominator(d, q);
  if (denom > bounds.max_denominator) {
    fail(ErrorKind::BoundExceeded, "denominator " + denom.str() + " exceeds the oracle bound " +
                                       std::to_string(bounds.max_denominator));
  }
  std::int64_t value = denom.convert_to<std::int64_t>();
  if (value > std::numeric_limits<std::int64_t>::max() / d) {
    fail(ErrorKind::BoundExceeded, "denominator too large for oracle arithmetic");
  }
  return value;
}

// Shift check over numerators modulo denom: sorted values must be advanced by a
// constant nonzero shift, which is returned.
bool shifted_by(const std::vector<std::int64_t>& sorted, int d, std::int64_t denom,
                std::int64_t* shift_out) {
  std::int64_t image = static_cast<std::int64_t>(d) * sorted[0] % denom;
  auto it = std::lower_bound(sorted.begin(), sorted.end(), image);
  if (it == sorted.end() || *it != image) return false;
  std::int64_t shift = it - sorted.begin();
  if (shift == 0) return false;
  std::int64_t size = static_cast<std::int64_t>(sorted.size());
  for (std::int64_t i = 0; i < size; ++i) {
    if (static_cast<std::int64_t>(d) * sorted[i] % denom != sorted[(i + shift) % size]) return false;
  }
  *shift_out = shift;
  return true;
}

}  // namespace

std::vector<RotationalOrbit> brute_force_orbits(int d, const RotationNumber& rot,
                                                const OracleBounds& bounds) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  int q = rot.q;
  std::int64_t denom = checked_denominator(d, q, bounds);
  std::vector<bool> visited(denom, false);
  std::vector<std::int64_t> cycle;
  cycle.reserve(q);
  std::vector<RotationalOrbit> orbits;
  for (std::int64_t start = 0; start < denom; ++start) {
    if (visited[start]) continue;
    cycle.clear();
    std::int64_t n = start;
    do {
      visited[n] = true;
      cycle.push_back(n);
      n = static_cast<std::int64_t>(d) * n % denom;
    } while (n != start);
    // Cycle lengths divide q because d^q = 1 modulo d^q - 1.
    if (static_cast<int>(cycle.size()) != q) continue;
    std::sort(cycle.begin(), cycle.end());
    std::int64_t shift = 0;
    if (!shifted_by(cycle, d, denom, &shift) || shift != rot.p) continue;
    std::vector<Angle> angles;
    angles.reserve(q);
    for (std::int64_t numerator : cycle) angles.push_back(Angle::make(numerator, denom));
    orbits.push_back(verify_orbit(d, std::move(angles)));
  }
  std::sort(orbits.begin(), orbits.end(), [](const RotationalOrbit& a, const RotationalOrbit& b) {
    return a.angles[0] < b.angles[0];
  });
  return orbits;
}

std::vector<RotationalSet> brute_force_sets(int d, const RotationNumber& rot, int k,
                                            const OracleBounds& bounds) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "subset size must be at least 1");
  std::vector<RotationalOrbit> orbits = brute_force_orbits(d, rot, bounds);
  int total = static_cast<int>(orbits.size());
  if (binomial(total, k) > bounds.max_subsets) {
    fail(ErrorKind::BoundExceeded, "C(" + std::to_string(total) + ", " + std::to_string(k) +
                                       ") exceeds the oracle subset bound " +
                                       std::to_string(bounds.max_subsets));
  }
  std::vector<RotationalSet> sets;
  if (total < k) return sets;

  std::int64_t denom = checked_denominator(d, rot.q, bounds);
  std::vector<std::vector<std::int64_t>> numerators(total);
  for (int i = 0; i < total; ++i) {
    for (const Angle& a : orbits[i].angles) {
      numerators[i].push_back((a.num() * (denom / a.den())).convert_to<std::int64_t>());
    }
  }

  int q = rot.q;
  std::int64_t expected_shift = static_cast<std::int64_t>(k) * rot.p;
  std::vector<std::int64_t> merged(static_cast<std::size_t>(k) * q);
  std::vector<int> index(k);
  for (int i = 0; i < k; ++i) index[i] = i;
  while (true) {
    auto out = merged.begin();
    for (int i : index) out = std::copy(numerators[i].begin(), numerators[i].end(), out);
    std::sort(merged.begin(), merged.end());
    std::int64_t shift = 0;
    if (shifted_by(merged, d, denom, &shift) && shift == expected_shift) {
      std::vector<Angle> angles;
      angles.reserve(merged.size());
      for (std::int64_t numerator : merged) angles.push_back(Angle::make(numerator, denom));
      RotationalSet set = verify_set(d, std::move(angles));
      if (set.orbit_count != k || set.reduced_rotation != rot) {
        fail(ErrorKind::InternalError, "brute-force set has unexpected structure");
      }
      sets.push_back(std::move(set));
    }
    // Next k-combination in lexicographic order.
    int pos = k - 1;
    while (pos >= 0 && index[pos] == total - k + pos) --pos;
    if (pos < 0) break;
    ++index[pos];
    for (int j = pos + 1; j < k; ++j) index[j] = index[j - 1] + 1;
  }
  std::sort(sets.begin(), sets.end(), [](const RotationalSet& a, const RotationalSet& b) {
    return std::lexicographical_compare(a.angles.begin(), a.angles.end(), b.angles.begin(),
                                        b.angles.end());
  });
  return sets;
}

OracleReport cross_check(int d, const RotationNumber& rot, const OracleBounds& bounds) {
  OracleReport report;
  report.d = d;
  report.p = rot.p;
  report.q = rot.q;
  auto note = [&report](const std::string& message) { report.mismatches.push_back(message); };

  // Orbits: constructive enumeration vs scan vs formula.
  std::vector<RepSequence> reps = enumerate_rep_sequences(d, rot.q);
  std::vector<RotationalOrbit> constructed;
  constructed.reserve(reps.size());
  for (const auto& rep : reps) constructed.push_back(orbit_from_rep(rep, rot));
  std::sort(constructed.begin(), constructed.end(),
            [](const RotationalOrbit& a, const RotationalOrbit& b) {
              return a.angles[0] < b.angles[0];
            });
  std::vector<RotationalOrbit> scanned = brute_force_orbits(d, rot, bounds);
  report.orbits_found = static_cast<std::int64_t>(scanned.size());

  if (Int(scanned.size()) != count_orbits(d, rot.q)) {
    note("orbit count: scan found " + std::to_string(scanned.size()) + ", formula gives " +
         count_orbits(d, rot.q).str());
  }
  if (constructed.size() != scanned.size()) {
    note("orbit count: construction gives " + std::to_string(constructed.size()) +
         ", scan found " + std::to_string(scanned.size()));
  } else {
    for (std::size_t i = 0; i < scanned.size(); ++i) {
      if (constructed[i].angles != scanned[i].angles) {
        note("orbit " + std::to_string(i) + " differs: constructed least " +
             constructed[i].angles[0].str() + ", scanned least " + scanned[i].angles[0].str());
      }
    }
  }

  // Set counts: the two formulas against each other.
  std::vector<Int> recursive = count_sets_recursive(d, rot.q);
  std::vector<Int> closed = count_sets_closed(d, rot.q);
  for (int k = 1; k <= d - 1; ++k) {
    if (recursive[k - 1] != closed[k - 1]) {
      note("N_" + std::to_string(k) + ": recursive " + recursive[k - 1].str() + " vs closed " +
           closed[k - 1].str());
    }
  }

  // Sets per k: clique enumeration vs subset scan, element by element.
  auto angle_key = [](const RotationalSet& a, const RotationalSet& b) {
    return std::lexicographical_compare(a.angles.begin(), a.angles.end(), b.angles.begin(),
                                        b.angles.end());
  };
  for (int k = 1; k <= d - 1; ++k) {
    std::vector<RotationalSet> enumerated = enumerate_sets(d, rot, k);
    std::sort(enumerated.begin(), enumerated.end(), angle_key);
    std::vector<RotationalSet> tested = brute_force_sets(d, rot, k, bounds);
    report.sets_found_by_k.push_back(static_cast<std::int64_t>(tested.size()));

    if (Int(tested.size()) != recursive[k - 1]) {
      note("set count k=" + std::to_string(k) + ": scan found " + std::to_string(tested.size()) +
           ", formula gives " + recursive[k - 1].str());
    }
    if (enumerated.size() != tested.size()) {
      note("set count k=" + std::to_string(k) + ": enumeration gives " +
           std::to_string(enumerated.size()) + ", scan found " + std::to_string(tested.size()));
      continue;
    }
    for (std::size_t i = 0; i < tested.size(); ++i) {
      if (enumerated[i].angles != tested[i].angles) {
        note("set " + std::to_string(i) + " (k=" + std::to_string(k) +
             ") differs between enumeration and scan");
      }
    }
    // Each scanned set must decompose into orbits whose reps interlace.
    for (std::size_t i = 0; i < tested.size(); ++i) {
      std::vector<RepSequence> set_reps;
      set_reps.reserve(tested[i].orbits.size());
      for (const auto& orbit : tested[i].orbits) {
        set_reps.push_back(least_tuple_to_rep(orbit.least_tuple, rot));
      }
      if (!can_interlace(set_reps)) {
        note("set " + std::to_string(i) + " (k=" + std::to_string(k) +
             "): orbit reps do not interlace");
      }
    }
  }
  return report;
}

}  // namespace rotset
