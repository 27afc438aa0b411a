#pragma once

#include <stdexcept>
#include <string>

namespace rotset {

enum class ErrorKind {
  ParseError,
  InvalidArgument,
  NotPeriodic,
  NotCoprime,
  NotRotational,
  NotSingleOrbit,
  LengthMismatch,
  NotLeastElement,
  MixedParameters,
  NotInterlaceable,
  DuplicateOrbit,
  InternalPeriodViolation,
  InvalidSequence,
  BoundExceeded,
  InternalError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotRotational: return "NotRotational";
    case ErrorKind::NotSingleOrbit: return "NotSingleOrbit";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotLeastElement: return "NotLeastElement";
    case ErrorKind::MixedParameters: return "MixedParameters";
    case ErrorKind::NotInterlaceable: return "NotInterlaceable";
    case ErrorKind::DuplicateOrbit: return "DuplicateOrbit";
    case ErrorKind::InternalPeriodViolation: return "InternalPeriodViolation";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace rotset
