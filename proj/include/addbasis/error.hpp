#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addbasis {

enum class Errc {
  HoleAboveThreshold,
  EmptyOperand,
  EmptySet,
  ModulusMismatch,
  PreconditionViolated,
  NotSaturable,
  FiniteSet,
  NotABasis,
  CapExceeded,
  XNotSubset,
  ParseError,
  ValidationError,
  UnknownFormat,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure in the library is reported through this type; `code()`
/// identifies the condition, `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace addbasis
