#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library: direct quadrature of a defining integral instead of
// a closed form.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "cslb/spectral.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// Raw spectral weight, written out again so the oracle does not share code.
inline double gamma_raw(cslb::CutoffKind kind, double wm, double w) {
  switch (kind) {
    case cslb::CutoffKind::White: return 1.0;
    case cslb::CutoffKind::Heaviside: return w < wm ? 1.0 : 0.0;
    case cslb::CutoffKind::GaussianExp: return std::exp(-(w / wm) * (w / wm));
    case cslb::CutoffKind::Exponential: return std::exp(-w / wm);
    case cslb::CutoffKind::Lorentzian: return 1.0 / (1.0 + (w / wm) * (w / wm));
  }
  return 0.0;
}

// Sine integral as the integral of sin(u)/u, one panel per half period.
inline double si(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  auto f = [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; };
  double sum = 0.0;
  double a = 0.0;
  while (a < ax) {
    const double b = std::min(ax, a + pi);
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 10, 1e-15);
    a = b;
  }
  return x < 0 ? -sum : sum;
}

// delta(tau) = (1/pi) int_0^inf gamma(w) cos(w tau) dw, in units of u = w/wm.
inline double delta(cslb::CutoffKind kind, double wm, double tau) {
  const double s = wm * std::abs(tau);
  auto g = [&](double u) { return gamma_raw(kind, 1.0, u); };
  double integral = 0.0;
  if (kind == cslb::CutoffKind::Heaviside || kind == cslb::CutoffKind::GaussianExp) {
    const double top = kind == cslb::CutoffKind::Heaviside ? 1.0 : 9.0;
    const int panels = 8 + static_cast<int>(s * top);
    for (int i = 0; i < panels; ++i) {
      const double a = top * i / panels;
      const double b = top * (i + 1) / panels;
      integral += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          [&](double u) { return g(u) * std::cos(u * s); }, a, b, 8, 1e-14);
    }
  } else if (s == 0.0) {
    integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-14);
  } else {
    boost::math::quadrature::ooura_fourier_cos<double> cosine(1e-13);
    integral = cosine.integrate(g, s).first;
  }
  return wm * integral / pi;
}

// Lambda(t) = int_0^t (t - tau) delta(tau) dtau, from the library correlator.
inline double lambda_time_domain(const cslb::CutoffSpec& spec, double t) {
  if (spec.is_white()) return 0.5 * t;
  const double wm = spec.omega_m();
  const double x = wm * t;
  // integrate in s = wm tau over [0, x]
  auto f = [&](double s) { return (x - s) * cslb::delta_gamma(spec, s / wm) / wm; };
  const int panels = 4 + static_cast<int>(std::min(x, 4000.0));
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = x * i / panels;
    const double b = x * (i + 1) / panels;
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 8, 1e-15);
  }
  return sum / wm;
}

// int_0^t delta(tau) dtau / t, the library's I-tilde by direct integration.
inline double i_tilde(const cslb::CutoffSpec& spec, double t) {
  if (spec.is_white()) return 0.5 / t;
  const double wm = spec.omega_m();
  const double x = wm * t;
  auto f = [&](double s) { return cslb::delta_gamma(spec, s / wm) / wm; };
  const int panels = 4 + static_cast<int>(std::min(x, 4000.0));
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, x * i / panels, x * (i + 1) / panels,
                                                                         8, 1e-15);
  }
  return sum / t;
}

// Form factor of a homogeneous sphere,
// int d^3k exp(-r_c^2 k^2) k_x^2 mu(kR)^2 = (4 pi / 3) int_0^inf k^4 exp(-r_c^2 k^2) mu(kR)^2 dk.
inline double sphere_form_factor(double radius, double r_c) {
  auto mu = [](double q) {
    if (q < 1e-3) return 1.0 - q * q / 10.0;
    return 3.0 * (std::sin(q) - q * std::cos(q)) / (q * q * q);
  };
  // k in units of 1/r_c
  const double rho = radius / r_c;
  auto f = [&](double k) {
    const double m = mu(k * rho);
    return k * k * k * k * std::exp(-k * k) * m * m;
  };
  double sum = 0.0;
  const int panels = 64;
  for (int i = 0; i < panels; ++i) {
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 10.0 * i / panels,
                                                                         10.0 * (i + 1) / panels, 8, 1e-15);
  }
  return 4.0 * pi / 3.0 * sum / std::pow(r_c, 5);
}

// Root of x^2 - (2/q) x + 2/q = 0 above 1: the large-x Lorentzian J crossing,
// where the exponential remainder e^{-x} is far below double precision at q = 0.1.
inline double lorentzian_j_crossing(double q) {
  const double b = 1.0 / q;
  return b + std::sqrt(b * b - 2.0 * b);
}

}  // namespace oracle
