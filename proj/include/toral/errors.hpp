#pragma once

#include <stdexcept>
#include <string>

namespace toral {

// Machine-readable domain error codes, mirrored by the CLI's error JSON.
enum class Err {
  NotExpanding,
  NotDiagonal,
  NotSimilar,
  NotInvertible,
  InvalidSource,
  Unverified,
  NotComplexPair,
  NotLinearClass,
  DimensionUnsupported,
  Indeterminate,
  UnsupportedK,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotExpanding:         return "NotExpanding";
    case Err::NotDiagonal:          return "NotDiagonal";
    case Err::NotSimilar:           return "NotSimilar";
    case Err::NotInvertible:        return "NotInvertible";
    case Err::InvalidSource:        return "InvalidSource";
    case Err::Unverified:           return "Unverified";
    case Err::NotComplexPair:       return "NotComplexPair";
    case Err::NotLinearClass:       return "NotLinearClass";
    case Err::DimensionUnsupported: return "DimensionUnsupported";
    case Err::Indeterminate:        return "Indeterminate";
    case Err::UnsupportedK:         return "UnsupportedK";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

} // namespace toral
