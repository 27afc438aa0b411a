#include "rotset/rotation_number.hpp"

#include <numeric>

namespace rotset {

RotationNumber RotationNumber::make(int p, int q) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "rotation number requires q >= 2");
  if (p < 1 || p >= q) fail(ErrorKind::InvalidArgument, "rotation number requires 1 <= p < q");
  if (std::gcd(p, q) != 1) {
    fail(ErrorKind::NotCoprime, "rotation number " + std::to_string(p) + "/" + std::to_string(q) +
                                    " is not reduced; use the reduced form");
  }
  RotationNumber rot;
  rot.p = p;
  rot.q = q;
  rot.p_star = static_cast<int>(mod_inverse(p, q));
  return rot;
}

RotationNumber RotationNumber::reduce(int p_raw, int size) {
  if (size < 2) fail(ErrorKind::InvalidArgument, "rotation number requires size >= 2");
  if (p_raw < 1 || p_raw >= size) {
    fail(ErrorKind::InvalidArgument, "rotation number requires 1 <= p_raw < size");
  }
  int g = std::gcd(p_raw, size);
  return make(p_raw / g, size / g);
}

}  // namespace rotset
