#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmjm {

/// Every failure a kmjm operation can report. The CLI prints the variant name
/// verbatim, so keep `error_name` in sync.
enum class ErrorKind {
  NotGCM,
  NotSymmetrizable,
  DimensionMismatch,
  DegenerateDenominator,
  HeightOutOfRange,
  NotRealRoot,
  NotReduced,
  NotDominant,
  InvalidDegree,
  NotPiSystem,
  OracleTooShort,
  SingularB,
  ZeroElement,
  ResourceCap,
  InternalInconsistency,
  TruncationAmbiguous,
  PreconditionViolated,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string name() const { return std::string(error_name(kind_)); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace kmjm
