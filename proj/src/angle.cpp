#include "rotset/angle.hpp"

#include <cctype>

namespace rotset {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Angle Angle::make(Int numerator, Int denominator) {
  if (denominator <= 0) fail(ErrorKind::InvalidArgument, "angle denominator must be positive");
  numerator %= denominator;
  if (numerator < 0) numerator += denominator;
  Int g = boost::multiprecision::gcd(numerator, denominator);
  Angle a;
  a.num_ = numerator / g;
  a.den_ = denominator / g;
  return a;
}

Angle Angle::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    fail(ErrorKind::ParseError, "expected fraction \"a/b\", got \"" + text + "\"");
  }
  std::string num_part = text.substr(0, slash);
  std::string den_part = text.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    fail(ErrorKind::ParseError, "expected nonnegative decimal integers in \"" + text + "\"");
  }
  Int num(num_part);
  Int den(den_part);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in \"" + text + "\"");
  if (num >= den) fail(ErrorKind::ParseError, "fraction \"" + text + "\" is not in [0, 1)");
  return make(num, den);
}

Angle sigma(int d, const Angle& t) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  return Angle::make(Int(d) * t.num(), t.den());
}

Angle sigma_pow(int d, std::int64_t k, const Angle& t) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (k < 0) fail(ErrorKind::InvalidArgument, "sigma_pow requires k >= 0");
  Int factor = boost::multiprecision::powm(Int(d), Int(k), t.den());
  return Angle::make(factor * t.num(), t.den());
}

}  // namespace rotset
