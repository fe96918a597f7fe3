#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cslb/special_functions.hpp"

namespace cslb {

enum class CutoffKind { White, Heaviside, GaussianExp, Exponential, Lorentzian };

std::string_view to_string(CutoffKind kind);
/// Accepts the canonical names case-insensitively ("lorentzian", "gaussian-exp", ...).
std::optional<CutoffKind> parse_cutoff_kind(std::string_view name);

/// Spectral cutoff gamma(omega) of the collapse noise.
///
/// White carries no cutoff frequency; every other kind requires omega_m > 0.
class CutoffSpec {
 public:
  static CutoffSpec white() { return CutoffSpec(); }
  static CutoffSpec lorentzian(double omega_m) { return {CutoffKind::Lorentzian, omega_m}; }
  static CutoffSpec heaviside(double omega_m) { return {CutoffKind::Heaviside, omega_m}; }
  static CutoffSpec gaussian_exp(double omega_m) { return {CutoffKind::GaussianExp, omega_m}; }
  static CutoffSpec exponential(double omega_m) { return {CutoffKind::Exponential, omega_m}; }

  /// Throws Error(InvalidArgument) when omega_m is not positive for a non-white kind.
  CutoffSpec(CutoffKind kind, double omega_m);

  CutoffKind kind() const noexcept { return kind_; }
  bool is_white() const noexcept { return kind_ == CutoffKind::White; }
  /// Cutoff angular frequency [1/s]; infinity for White.
  double omega_m() const noexcept;

  std::string describe() const;

 private:
  CutoffSpec() = default;

  CutoffKind kind_ = CutoffKind::White;
  double omega_m_ = 0.0;
};

/// gamma(omega), omega >= 0.
double gamma_of_omega(const CutoffSpec& spec, double omega);

/// Time correlator (1/pi) \int_0^inf gamma(w) cos(w tau) dw [1/s].
/// Throws WhiteNotPointwise for White.
double delta_gamma(const CutoffSpec& spec, double tau);

/// (1/pi) \int_0^inf gamma(w) dw, i.e. delta_gamma(0). Throws for White.
double delta_gamma_at_zero(const CutoffSpec& spec);

/// Accumulated collapse factor Lambda(t) = \int_0^t ds \int_0^s du delta(s-u) [s],
/// closed forms per kernel.
double lambda_big(const CutoffSpec& spec, double t, const SpecialFunctionConfig& sf = {});

struct QuadratureConfig {
  double rel_tol = 1e-12;
  /// Maximum bisection depth of the adaptive Gauss-Kronrod rule on each panel.
  unsigned max_depth = 8;
  /// Number of full oscillation periods integrated panel by panel before the
  /// remaining tail is handled as a Fourier integral.
  int max_periods = 2000;
};

/// Independent route to Lambda(t) through the frequency-domain identity
/// Lambda(t) = (1/pi) \int_0^inf gamma(w) (1 - cos wt) / w^2 dw.
///
/// Accepts White too (tail handled analytically). Throws
/// QuadratureNonConvergence when a panel misses its tolerance.
double lambda_big_quadrature(const CutoffSpec& spec, double t, double rel_tol = 1e-12);
double lambda_big_quadrature(const CutoffSpec& spec, double t, const QuadratureConfig& cfg);

}  // namespace cslb
