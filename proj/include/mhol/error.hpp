#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mhol {

enum class ErrorKind {
  DimensionMismatch,
  ModulusMismatch,
  SingularMatrix,
  Infeasible,
  NotFullRank,
  BoundExceeded,
  SpecMismatch,
  NotAntiSymmetric,
  NotSymmetric,
  TauSingular,
  HalfExcluded,
  CriterionFails,
  VerificationFailed,
  SingularInput,
  SingularT,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mhol
