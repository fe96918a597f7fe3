#pragma once

#include <functional>
#include <vector>

#include "cslb/collapse.hpp"
#include "cslb/fluctuations.hpp"
#include "cslb/measurement.hpp"
#include "cslb/spectral.hpp"

namespace cslb {

struct SolverConfig {
  double rel_tol = 1e-10;
  int max_iterations = 200;
  double growth = 10.0;
  double t_floor = 1e-12;      // s
  double t_ceiling = 1e6;      // s
  double omega_floor = 1e-12;  // 1/s
  double omega_ceiling = 1e20; // 1/s

  void validate() const;
};

/// Root of a monotone target together with how it was found.
struct BoundResult {
  double value = 0.0;     // t_C [s] or omega_m [1/s], depending on the solver
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  double residual = 0.0;  // target(value) - goal
};

/// Solves Gamma(t_C) = 1 for a nondecreasing Gamma with Gamma(0) = 0:
/// geometric bracket growth from t_floor, then bisection.
/// Throws NoRootInBudget when Gamma < 1 at t_ceiling and NonMonotone when
/// the bracket samples decrease.
BoundResult collapse_time(const std::function<double(double)>& gamma_fn, const SolverConfig& cfg = {});

/// Collapse time of the battery scenario under the given cutoff.
BoundResult scenario_collapse_time(const CollapseParams& params, const CutoffSpec& spec,
                                   const MeasurementScenario& scenario, const SolverConfig& cfg = {});

/// White-noise collapse time from the cubic law, (1/K)^{1/3}.
double white_collapse_time_analytic(const CollapseParams& params, const MeasurementScenario& scenario);

/// Smallest Lorentzian omega_m for which the scenario collapses by t_m.
/// Throws NeverCollapsing if even white noise is too slow and
/// AlreadyCollapsing if the bracket floor already collapses in time.
BoundResult cutoff_lower_bound(const CollapseParams& params, const MeasurementScenario& scenario, double t_m,
                               const SolverConfig& cfg = {});

/// 2 / (K t_m^4): the cutoff bound when omega_m t_m << 1, where
/// Lambda ~ omega_m t^2 / 4.
double small_omega_cutoff_law(const CollapseParams& params, const MeasurementScenario& scenario, double t_m);

/// omega_m at which the normalized I or J measure drops to the threshold at t_m.
BoundResult fluctuation_bound(const FluctuationMeasure& measure, double t_m, CutoffKind kind,
                              const SolverConfig& cfg = {});

/// (t_c_white / t_m)^3: how far lambda can shrink with t_C still equal to t_m.
double lambda_rescale(double t_c_white, double t_m);

struct CurvePoint {
  double omega_m = 0.0;
  double t = 0.0;
};

/// t_C(omega_m) of a scenario on the given Lorentzian omega grid.
std::vector<CurvePoint> collapse_time_curve(const CollapseParams& params, const MeasurementScenario& scenario,
                                            const std::vector<double>& omega_grid, const SolverConfig& cfg = {});

/// Locus of measure(t, omega_m) = threshold: t as a function of omega_m.
std::vector<CurvePoint> fluctuation_locus(const FluctuationMeasure& measure, CutoffKind kind,
                                          const std::vector<double>& omega_grid, const SolverConfig& cfg = {});

}  // namespace cslb
