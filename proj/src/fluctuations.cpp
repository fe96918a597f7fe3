#include "cslb/fluctuations.hpp"

#include <cmath>
#include <numbers>

#include "cslb/error.hpp"

namespace cslb {

namespace {

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "time must be positive");
}

// (1 - e^{-x}) / x
double one_minus_exp_over_x(double x) {
  if (x < 1e-8) return 1.0 - 0.5 * x;
  return -std::expm1(-x) / x;
}

// 2 (x - 1 + e^{-x}) / x^2
double lorentzian_j(double x) {
  if (x < 1e-3) {
    return 1.0 - x / 3.0 + x * x / 12.0 - x * x * x / 60.0 + x * x * x * x / 360.0;
  }
  return 2.0 * (std::expm1(-x) + x) / (x * x);
}

}  // namespace

void FluctuationMeasure::validate() const {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "fluctuation threshold must lie in (0, 1)");
  }
}

double i_tilde(const CutoffSpec& spec, double t) {
  require_positive_time(t);
  if (spec.is_white()) return 0.5 / t;
  const double wm = spec.omega_m();
  const double x = wm * t;
  switch (spec.kind()) {
    case CutoffKind::Lorentzian: return 0.5 * wm * one_minus_exp_over_x(x);
    case CutoffKind::Heaviside: return si(x) / (std::numbers::pi * t);
    case CutoffKind::GaussianExp: return 0.5 * erf(0.5 * x) / t;
    case CutoffKind::Exponential: return std::atan(x) / (std::numbers::pi * t);
    case CutoffKind::White: break;
  }
  return 0.5 / t;
}

double j_tilde(const CutoffSpec& spec, double t) {
  require_positive_time(t);
  return 2.0 * lambda_big(spec, t) / (t * t);
}

double i_norm(const CutoffSpec& spec, double t) {
  require_positive_time(t);
  if (spec.is_white()) throw Error(ErrorKind::WhiteNotNormalizable, "white-noise I(0) diverges");
  if (spec.kind() == CutoffKind::Lorentzian) return one_minus_exp_over_x(spec.omega_m() * t);
  return i_tilde(spec, t) / delta_gamma_at_zero(spec);
}

double j_norm(const CutoffSpec& spec, double t) {
  require_positive_time(t);
  if (spec.is_white()) throw Error(ErrorKind::WhiteNotNormalizable, "white-noise J(0) diverges");
  if (spec.kind() == CutoffKind::Lorentzian) return lorentzian_j(spec.omega_m() * t);
  return j_tilde(spec, t) / delta_gamma_at_zero(spec);
}

double normalized_measure(const FluctuationMeasure& m, const CutoffSpec& spec, double t) {
  return m.kind == MeasureKind::I ? i_norm(spec, t) : j_norm(spec, t);
}

}  // namespace cslb
