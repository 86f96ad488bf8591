#include "addbasis/error.hpp"

namespace addbasis {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::HoleAboveThreshold: return "HoleAboveThreshold";
    case Errc::EmptyOperand: return "EmptyOperand";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotSaturable: return "NotSaturable";
    case Errc::FiniteSet: return "FiniteSet";
    case Errc::NotABasis: return "NotABasis";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::XNotSubset: return "XNotSubset";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownFormat: return "UnknownFormat";
  }
  return "Unknown";
}

}  // namespace addbasis
