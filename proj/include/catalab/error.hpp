#pragma once

#include <stdexcept>
#include <string>

namespace catalab {

enum class ErrorKind {
  InvalidSpec,
  InvalidRange,
  TooLarge,
  InvalidSubset,
  DimensionMismatch,
  LengthMismatch,
  NoConvergence,
  Overlap,
  NonpositiveGap,
  DegenerateTarget,
  WrongShape,
  InvalidOrder,
  UnknownPreset,
  Io,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that front ends can
/// map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::InvalidRange: return "invalid-range";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::InvalidSubset: return "invalid-subset";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::Overlap: return "overlap";
    case ErrorKind::NonpositiveGap: return "nonpositive-gap";
    case ErrorKind::DegenerateTarget: return "degenerate-target";
    case ErrorKind::WrongShape: return "wrong-shape";
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::UnknownPreset: return "unknown-preset";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace catalab
