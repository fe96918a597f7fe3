#include "cslb/collapse.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cslb/error.hpp"

namespace cslb {

namespace {

constexpr double kPi32 = 5.568327996831707845;  // pi^{3/2}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "time must be finite and >= 0");
}

// e^{-z} - 1 + (z/2)(e^{-z} + 1), z = R^2/r_c^2. The leading z^3/12 is the
// difference of O(z) terms, so small z goes through the Maclaurin series
// sum_{k>=3} (-1)^k (2-k) z^k / (2 k!).
double sphere_bracket(double z) {
  if (z < 1.0) {
    double term = z * z * z / 6.0;  // z^k / k! at k = 3
    double sum = 0.0;
    for (int k = 3; k < 40; ++k) {
      const double c = ((k % 2 == 0) ? 1.0 : -1.0) * (2.0 - k) / 2.0;
      const double contrib = c * term;
      sum += contrib;
      if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
      term *= z / (k + 1);
    }
    return sum;
  }
  const double e = std::exp(-z);
  return e - 1.0 + 0.5 * z * (e + 1.0);
}

// Fourier transform of a unit-mass homogeneous sphere, 3 (sin q - q cos q) / q^3.
double sphere_mu(double q) {
  if (q < 1e-2) {
    const double q2 = q * q;
    return 1.0 - q2 / 10.0 + q2 * q2 / 280.0;
  }
  return 3.0 * (std::sin(q) - q * std::cos(q)) / (q * q * q);
}

}  // namespace

void CollapseParams::validate() const {
  if (!(lambda > 0.0) || !(r_c > 0.0) || !(m0 > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "collapse parameters lambda, r_c and m0 must be positive");
  }
}

double gamma_point(const CollapseParams& params, const CutoffSpec& spec,
                   std::span<const DisplacedSpecies> species, double t) {
  params.validate();
  require_time(t);
  double sum = 0.0;
  for (const auto& s : species) {
    if (!(s.displacement >= 0.0) || !(s.count >= 0.0) || !(s.nucleons > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "species '" + s.name + "' has invalid fields");
    }
    if (s.displacement >= 0.1 * params.r_c) {
      throw Error(ErrorKind::DisplacementTooLarge,
                  "species '" + s.name + "' moves by >= r_c/10; the small-displacement form does not apply");
    }
    sum += s.nucleons * s.nucleons * s.count * s.displacement * s.displacement;
  }
  return params.lambda * lambda_big(spec, t) * sum / (2.0 * params.r_c * params.r_c);
}

double gamma_current(const CollapseParams& params, const CutoffSpec& spec,
                     const MeasurementScenario& scenario, double t) {
  params.validate();
  scenario.battery.validate();
  require_time(t);
  if (t == 0.0) return 0.0;
  const auto& battery = scenario.battery;
  double weighted = 0.0;
  for (const auto& s : battery.species) weighted += s.nucleons * s.nucleons * battery.velocity_of(s);
  return params.lambda * scenario.particle_current() * battery.h_electrolyte * weighted * t * t *
         lambda_big(spec, t) / (2.0 * params.r_c * params.r_c);
}

double white_cubic_coefficient(const CollapseParams& params, const MeasurementScenario& scenario) {
  params.validate();
  scenario.battery.validate();
  const auto& battery = scenario.battery;
  double weighted = 0.0;
  for (const auto& s : battery.species) weighted += s.nucleons * s.nucleons * battery.velocity_of(s);
  return params.lambda * scenario.particle_current() * battery.h_electrolyte * weighted /
         (4.0 * params.r_c * params.r_c);
}

double ions_displaced(double i_electric, double h, double v) {
  if (!(i_electric > 0.0) || !(h > 0.0) || !(v > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "ions_displaced: current, thickness and velocity must be positive");
  }
  return i_electric / constants::elementary_charge * h / v;
}

double sphere_form_factor(double radius, double r_c) {
  if (!(radius > 0.0) || !(r_c > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "sphere_form_factor: radius and r_c must be positive");
  }
  const double rho = radius / r_c;
  const double z = rho * rho;
  const double z3 = z * z * z;
  const double rc5 = std::pow(r_c, 5);
  return kPi32 / rc5 * sphere_bracket(z) * 6.0 / z3;
}

McEstimate sphere_form_factor_mc(double radius, double r_c, std::int64_t samples, std::uint64_t seed) {
  if (!(radius > 0.0) || !(r_c > 0.0) || samples < 2) {
    throw Error(ErrorKind::InvalidArgument, "sphere_form_factor_mc: bad radius, r_c or sample count");
  }
  // exp(-r_c^2 k^2) d^3k = (pi^{3/2}/r_c^3) x N(0, 1/(2 r_c^2))^3
  const double sigma = 1.0 / (std::sqrt(2.0) * r_c);
  const double norm = kPi32 / (r_c * r_c * r_c);
  constexpr std::int64_t chunk = 1 << 16;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t start = 0, c = 0; start < samples; start += chunk, ++c) {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(c)));
    std::normal_distribution<double> normal(0.0, sigma);
    const std::int64_t end = std::min(samples, start + chunk);
    for (std::int64_t i = start; i < end; ++i) {
      const double kx = normal(rng);
      const double ky = normal(rng);
      const double kz = normal(rng);
      const double k = std::sqrt(kx * kx + ky * ky + kz * kz);
      const double mu = sphere_mu(k * radius);
      const double f = norm * kx * kx * mu * mu;
      sum += f;
      sum_sq += f * f;
    }
  }
  const double n = static_cast<double>(samples);
  McEstimate est;
  est.samples = samples;
  est.mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
  est.std_error = std::sqrt(var / n);
  return est;
}

double gamma_sphere(const CollapseParams& params, const CutoffSpec& spec, double nucleons, double count,
                    double radius, double delta, double t) {
  params.validate();
  require_time(t);
  if (!(nucleons > 0.0) || !(count >= 0.0) || !(delta >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "gamma_sphere: invalid nucleon count, multiplicity or displacement");
  }
  if (delta >= 0.1 * params.r_c) {
    throw Error(ErrorKind::DisplacementTooLarge, "sphere displacement >= r_c/10");
  }
  // lambda r_c^3 m^2 / (pi^{3/2} m0^2) with m = n m0
  const double rc3 = params.r_c * params.r_c * params.r_c;
  return count * params.lambda * rc3 * nucleons * nucleons / kPi32 * delta * delta * lambda_big(spec, t) *
         sphere_form_factor(radius, params.r_c);
}

}  // namespace cslb
