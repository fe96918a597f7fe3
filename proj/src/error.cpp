#include "cslb/error.hpp"

namespace cslb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::WhiteNotPointwise: return "WhiteNotPointwise";
    case ErrorKind::WhiteNotNormalizable: return "WhiteNotNormalizable";
    case ErrorKind::WhiteNotSamplable: return "WhiteNotSamplable";
    case ErrorKind::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorKind::DisplacementTooLarge: return "DisplacementTooLarge";
    case ErrorKind::NoRootInBudget: return "NoRootInBudget";
    case ErrorKind::AlreadyCollapsing: return "AlreadyCollapsing";
    case ErrorKind::NeverCollapsing: return "NeverCollapsing";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace cslb
