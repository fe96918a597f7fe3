#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "cslb/constants.hpp"
#include "cslb/mc_estimate.hpp"
#include "cslb/measurement.hpp"
#include "cslb/spectral.hpp"

namespace cslb {

struct CollapseParams {
  double lambda = 1e-8;                          // 1/s
  double r_c = 1e-7;                             // m
  double m0 = constants::nucleon_mass;           // kg

  void validate() const;
};

/// N particles of n nucleons each, every one displaced by the same distance.
struct DisplacedSpecies {
  std::string name;
  double nucleons = 1.0;
  double count = 1.0;
  double displacement = 0.0;  // m
};

/// Decay exponent in the point-particle, diagonal-term approximation:
/// lambda Lambda(t) sum_s n_s^2 N_s Delta_s^2 / (2 r_c^2).
/// Throws DisplacementTooLarge when any Delta >= r_c / 10.
double gamma_point(const CollapseParams& params, const CutoffSpec& spec,
                   std::span<const DisplacedSpecies> species, double t);

/// Decay exponent of the battery ions moved by a current pulse. Each ion
/// species contributes n^2 N Delta^2 with N = I_p h / v and Delta = v t, so
/// Gamma = lambda I_p h t^2 Lambda(t) sum_s n_s^2 v_s / (2 r_c^2).
///
/// The electric current is turned into a particle current I_p = I/e before
/// use; that is what reproduces the published ion counts.
double gamma_current(const CollapseParams& params, const CutoffSpec& spec,
                     const MeasurementScenario& scenario, double t);

/// K in Gamma_white(t) = K t^3 for gamma_current [1/s^3].
double white_cubic_coefficient(const CollapseParams& params, const MeasurementScenario& scenario);

/// Ions displaced by an electric current: (I/e) h / v.
double ions_displaced(double i_electric, double h, double v);

/// \int d^3k exp(-r_c^2 k^2) k_x^2 |mu(k)|^2 for a homogeneous sphere of
/// radius R with unit total mass [1/m^5].
double sphere_form_factor(double radius, double r_c);

/// Monte-Carlo estimate of the same k-integral: k drawn from the Gaussian
/// weight, k_x^2 |mu(k)|^2 averaged. Deterministic in (samples, seed).
McEstimate sphere_form_factor_mc(double radius, double r_c, std::int64_t samples, std::uint64_t seed);

/// Decay exponent for `count` identical homogeneous spheres displaced by delta.
double gamma_sphere(const CollapseParams& params, const CutoffSpec& spec, double nucleons, double count,
                    double radius, double delta, double t);

}  // namespace cslb
