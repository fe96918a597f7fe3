#include "cslb/spectral.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "cslb/error.hpp"

namespace cslb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin(x)/x without the 0/0 at the origin.
double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// (1 - cos u) / u^2
double one_minus_cos_over_sq(double u) {
  const double s = sinc(0.5 * u);
  return 0.5 * s * s;
}

// e^{-x} + x - 1 for x >= 0
double exp_minus_one_plus_x(double x) {
  if (x < 1e-3) {
    const double x2 = x * x;
    return x2 * (0.5 - x / 6.0 + x2 / 24.0 - x2 * x / 120.0 + x2 * x2 / 720.0);
  }
  return std::expm1(-x) + x;
}

void require_nonnegative_time(double t, const char* who) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::InvalidArgument, std::string(who) + ": time must be finite and >= 0");
  }
}

}  // namespace

std::string_view to_string(CutoffKind kind) {
  switch (kind) {
    case CutoffKind::White: return "white";
    case CutoffKind::Heaviside: return "heaviside";
    case CutoffKind::GaussianExp: return "gaussian-exp";
    case CutoffKind::Exponential: return "exponential";
    case CutoffKind::Lorentzian: return "lorentzian";
  }
  return "unknown";
}

std::optional<CutoffKind> parse_cutoff_kind(std::string_view name) {
  std::string lowered;
  for (char c : name) {
    if (c == '_') c = '-';
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lowered == "white") return CutoffKind::White;
  if (lowered == "heaviside" || lowered == "theta") return CutoffKind::Heaviside;
  if (lowered == "gaussian-exp" || lowered == "gaussian" || lowered == "gaussianexp")
    return CutoffKind::GaussianExp;
  if (lowered == "exponential" || lowered == "exp") return CutoffKind::Exponential;
  if (lowered == "lorentzian") return CutoffKind::Lorentzian;
  return std::nullopt;
}

CutoffSpec::CutoffSpec(CutoffKind kind, double omega_m) : kind_(kind), omega_m_(omega_m) {
  if (kind_ != CutoffKind::White && !(omega_m_ > 0.0 && std::isfinite(omega_m_))) {
    throw Error(ErrorKind::InvalidArgument, "cutoff frequency must be positive and finite");
  }
  if (kind_ == CutoffKind::White) omega_m_ = 0.0;
}

double CutoffSpec::omega_m() const noexcept {
  return is_white() ? std::numeric_limits<double>::infinity() : omega_m_;
}

std::string CutoffSpec::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (!is_white()) os << "(omega_m=" << omega_m_ << ")";
  return os.str();
}

double gamma_of_omega(const CutoffSpec& spec, double omega) {
  if (!(omega >= 0.0)) throw Error(ErrorKind::InvalidArgument, "gamma_of_omega: omega must be >= 0");
  const double wm = spec.omega_m();
  switch (spec.kind()) {
    case CutoffKind::White: return 1.0;
    case CutoffKind::Heaviside: return omega < wm ? 1.0 : 0.0;
    case CutoffKind::GaussianExp: {
      const double r = omega / wm;
      return std::exp(-r * r);
    }
    case CutoffKind::Exponential: return std::exp(-omega / wm);
    case CutoffKind::Lorentzian: {
      const double r = omega / wm;
      return 1.0 / (1.0 + r * r);
    }
  }
  return 0.0;
}

double delta_gamma_at_zero(const CutoffSpec& spec) {
  const double wm = spec.omega_m();
  switch (spec.kind()) {
    case CutoffKind::White:
      throw Error(ErrorKind::WhiteNotPointwise, "white-noise correlator is a Dirac delta");
    case CutoffKind::Heaviside: return wm / kPi;
    case CutoffKind::GaussianExp: return wm / (2.0 * std::sqrt(kPi));
    case CutoffKind::Exponential: return wm / kPi;
    case CutoffKind::Lorentzian: return 0.5 * wm;
  }
  return 0.0;
}

double delta_gamma(const CutoffSpec& spec, double tau) {
  if (!std::isfinite(tau)) throw Error(ErrorKind::InvalidArgument, "delta_gamma: non-finite lag");
  const double wm = spec.omega_m();
  const double x = wm * std::abs(tau);
  switch (spec.kind()) {
    case CutoffKind::White:
      throw Error(ErrorKind::WhiteNotPointwise, "white-noise correlator is a Dirac delta");
    case CutoffKind::Heaviside: return wm / kPi * sinc(x);
    case CutoffKind::GaussianExp: return wm / (2.0 * std::sqrt(kPi)) * std::exp(-0.25 * x * x);
    case CutoffKind::Exponential: return wm / kPi / (1.0 + x * x);
    case CutoffKind::Lorentzian: return 0.5 * wm * std::exp(-x);
  }
  return 0.0;
}

double lambda_big(const CutoffSpec& spec, double t, const SpecialFunctionConfig& sf) {
  require_nonnegative_time(t, "lambda_big");
  if (t == 0.0) return 0.0;
  if (spec.is_white()) return 0.5 * t;
  const double wm = spec.omega_m();
  const double x = wm * t;
  switch (spec.kind()) {
    case CutoffKind::Lorentzian: return exp_minus_one_plus_x(x) / (2.0 * wm);
    case CutoffKind::Heaviside: {
      const double half_sin = std::sin(0.5 * x);
      return (x * si(x, sf) - 2.0 * half_sin * half_sin) / (kPi * wm);
    }
    case CutoffKind::GaussianExp: {
      const double y = 0.5 * x;
      return std::expm1(-y * y) / (wm * std::sqrt(kPi)) + 0.5 * t * erf(y, sf);
    }
    case CutoffKind::Exponential:
      return (x * std::atan(x) - 0.5 * std::log1p(x * x)) / (kPi * wm);
    case CutoffKind::White: break;
  }
  return 0.5 * t;
}

double lambda_big_quadrature(const CutoffSpec& spec, double t, double rel_tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = rel_tol;
  return lambda_big_quadrature(spec, t, cfg);
}

double lambda_big_quadrature(const CutoffSpec& spec, double t, const QuadratureConfig& cfg) {
  require_nonnegative_time(t, "lambda_big_quadrature");
  if (!(cfg.rel_tol >= 1e-12) || !(cfg.rel_tol < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "lambda_big_quadrature: rel_tol must be >= 1e-12");
  }
  if (t == 0.0) return 0.0;

  // Work in u = omega t, where the kernel (1 - cos u)/u^2 has unit period 2 pi.
  const double s = spec.is_white() ? std::numeric_limits<double>::infinity() : spec.omega_m() * t;
  // The Heaviside kernel is integrated only up to its edge, where gamma is 1;
  // evaluating the step at the rounded edge would flip a quadrature node.
  auto weight = [&](double u) {
    return spec.kind() == CutoffKind::Heaviside ? 1.0 : gamma_of_omega(spec, u / t);
  };
  auto integrand = [&](double u) { return weight(u) * one_minus_cos_over_sq(u); };

  // Where gamma becomes negligible (or exactly zero for the Heaviside kernel).
  double support = std::numeric_limits<double>::infinity();
  switch (spec.kind()) {
    case CutoffKind::Heaviside: support = s; break;
    case CutoffKind::GaussianExp: support = 7.0 * s; break;
    case CutoffKind::Exponential: support = 50.0 * s; break;
    default: break;
  }

  std::vector<double> edges{0.0};
  if (std::isfinite(s)) {
    for (double e = s; e < kTwoPi && e < support; e *= 10.0) edges.push_back(e);
  }
  const bool panel_to_support =
      spec.kind() == CutoffKind::Heaviside || support <= kTwoPi * cfg.max_periods;
  for (long j = 1;; ++j) {
    const double e = kTwoPi * static_cast<double>(j);
    if (e >= support) break;
    if (!panel_to_support && j > cfg.max_periods) break;
    if (e > edges.back()) edges.push_back(e);
  }
  const bool has_tail = !panel_to_support;
  if (panel_to_support && support > edges.back()) edges.push_back(support);

  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double err = 0.0;
    double l1 = 0.0;
    // Mapped onto [0, 1]: the adaptive rule misjudges its error on very short raw intervals.
    const double lo = edges[i];
    const double width = edges[i + 1] - edges[i];
    auto unit = [&](double y) { return integrand(lo + width * y) * width; };
    const double piece = gauss_kronrod<double, 15>::integrate(unit, 0.0, 1.0, cfg.max_depth, cfg.rel_tol, &err, &l1);
    total_err += err;
    total += piece;
  }

  // Deep bisection inflates Boost's error estimate with roundoff, so the
  // acceptance floor sits above the requested tolerance.
  if (total_err > std::max(100.0 * cfg.rel_tol, 1e-9) * std::abs(total)) {
    throw Error(ErrorKind::QuadratureNonConvergence,
                "frequency integral missed its tolerance at t=" + std::to_string(t) + " for " + spec.describe());
  }

  if (has_tail) {
    // Tail on [A, inf) with A a multiple of 2 pi: the smooth part
    // \int_A^inf gamma/u^2 du (mapped to y = A/u) minus the Fourier integral
    // \int_0^inf gamma(A+v)/(A+v)^2 cos v dv.
    const double a = edges.back();
    double smooth = 0.0;
    if (spec.is_white()) {
      smooth = 1.0 / a;
    } else {
      auto mapped = [&](double y) { return y <= 0.0 ? 0.0 : weight(a / y) / a; };
      double err = 0.0;
      double l1 = 0.0;
      smooth = gauss_kronrod<double, 15>::integrate(mapped, 0.0, 1.0, cfg.max_depth, cfg.rel_tol, &err, &l1);
    }
    boost::math::quadrature::ooura_fourier_cos<double> fourier(1e-10);
    auto amplitude = [&](double v) {
      const double u = a + v;
      return weight(u) / (u * u);
    };
    const auto [oscillatory, osc_err] = fourier.integrate(amplitude, 1.0);
    (void)osc_err;
    total += smooth - oscillatory;
  }

  return t / kPi * total;
}

}  // namespace cslb
