#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cslb {

enum class ErrorKind {
  InvalidArgument,
  WhiteNotPointwise,
  WhiteNotNormalizable,
  WhiteNotSamplable,
  QuadratureNonConvergence,
  DisplacementTooLarge,
  NoRootInBudget,
  AlreadyCollapsing,
  NeverCollapsing,
  NonMonotone,
  ResolutionTooCoarse,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the root-finding failures (as opposed to bad input).
  bool is_solver_error() const noexcept {
    return kind_ == ErrorKind::NoRootInBudget || kind_ == ErrorKind::AlreadyCollapsing ||
           kind_ == ErrorKind::NeverCollapsing || kind_ == ErrorKind::NonMonotone ||
           kind_ == ErrorKind::QuadratureNonConvergence || kind_ == ErrorKind::InvariantViolation;
  }

 private:
  ErrorKind kind_;
};

}  // namespace cslb
