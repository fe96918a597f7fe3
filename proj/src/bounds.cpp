#include "cslb/bounds.hpp"

#include <cmath>
#include <string>

#include "cslb/error.hpp"

namespace cslb {

namespace {

// Bisection on [lo, hi] for an increasing f with f(lo) < 0 <= f(hi).
// Geometric midpoints when `log_scale`, since cutoff brackets span decades.
BoundResult bisect(const std::function<double(double)>& f, double lo, double hi, const SolverConfig& cfg,
                   bool log_scale) {
  BoundResult r;
  int it = 0;
  while (it < cfg.max_iterations) {
    const double width = log_scale ? hi / lo - 1.0 : (hi - lo) / lo;
    if (width <= cfg.rel_tol) break;
    const double mid = log_scale ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++it;
  }
  if (it >= cfg.max_iterations) {
    throw Error(ErrorKind::NoRootInBudget, "bisection did not reach tolerance in " +
                                               std::to_string(cfg.max_iterations) + " iterations");
  }
  r.lo = lo;
  r.hi = hi;
  r.value = log_scale ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
  r.iterations = it;
  r.residual = f(r.value);
  return r;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1e-4)) throw Error(ErrorKind::InvalidArgument, "solver rel_tol must lie in (0, 1e-4)");
  if (max_iterations <= 0) throw Error(ErrorKind::InvalidArgument, "solver max_iterations must be positive");
  if (!(growth > 1.0)) throw Error(ErrorKind::InvalidArgument, "bracket growth factor must exceed 1");
  if (!(t_floor > 0.0 && t_ceiling > t_floor)) throw Error(ErrorKind::InvalidArgument, "bad time bracket limits");
  if (!(omega_floor > 0.0 && omega_ceiling > omega_floor)) {
    throw Error(ErrorKind::InvalidArgument, "bad cutoff bracket limits");
  }
}

BoundResult collapse_time(const std::function<double(double)>& gamma_fn, const SolverConfig& cfg) {
  cfg.validate();
  double lo = cfg.t_floor;
  double g_lo = gamma_fn(lo);
  if (g_lo >= 1.0) {
    throw Error(ErrorKind::NoRootInBudget, "Gamma already exceeds 1 at the bracket floor");
  }
  double hi = lo;
  double g_hi = g_lo;
  while (g_hi < 1.0) {
    if (hi >= cfg.t_ceiling) {
      throw Error(ErrorKind::NoRootInBudget, "no collapse before t = " + std::to_string(cfg.t_ceiling) + " s");
    }
    lo = hi;
    g_lo = g_hi;
    hi = std::min(hi * cfg.growth, cfg.t_ceiling);
    g_hi = gamma_fn(hi);
    if (g_hi < g_lo) throw Error(ErrorKind::NonMonotone, "Gamma(t) decreases on the bracket grid");
  }
  return bisect([&](double t) { return gamma_fn(t) - 1.0; }, lo, hi, cfg, false);
}

BoundResult scenario_collapse_time(const CollapseParams& params, const CutoffSpec& spec,
                                   const MeasurementScenario& scenario, const SolverConfig& cfg) {
  return collapse_time([&](double t) { return gamma_current(params, spec, scenario, t); }, cfg);
}

double white_collapse_time_analytic(const CollapseParams& params, const MeasurementScenario& scenario) {
  return std::cbrt(1.0 / white_cubic_coefficient(params, scenario));
}

BoundResult cutoff_lower_bound(const CollapseParams& params, const MeasurementScenario& scenario, double t_m,
                               const SolverConfig& cfg) {
  cfg.validate();
  if (!(t_m > 0.0)) throw Error(ErrorKind::InvalidArgument, "measurement time must be positive");
  if (gamma_current(params, CutoffSpec::white(), scenario, t_m) < 1.0) {
    throw Error(ErrorKind::NeverCollapsing, "even white noise does not collapse within t_m");
  }
  auto excess = [&](double omega) {
    return gamma_current(params, CutoffSpec::lorentzian(omega), scenario, t_m) - 1.0;
  };
  double lo = cfg.omega_floor;
  double f_lo = excess(lo);
  if (f_lo >= 0.0) throw Error(ErrorKind::AlreadyCollapsing, "collapse within t_m at the smallest cutoff probed");
  double hi = lo;
  double f_hi = f_lo;
  while (f_hi < 0.0) {
    if (hi >= cfg.omega_ceiling) throw Error(ErrorKind::NoRootInBudget, "cutoff bracket ceiling reached");
    lo = hi;
    f_lo = f_hi;
    hi = std::min(hi * cfg.growth, cfg.omega_ceiling);
    f_hi = excess(hi);
    if (f_hi < f_lo) throw Error(ErrorKind::NonMonotone, "Gamma(t_m) decreases with the cutoff");
  }
  BoundResult r = bisect(excess, lo, hi, cfg, true);

  // t_C must decrease across the final bracket.
  const double tc_lo = scenario_collapse_time(params, CutoffSpec::lorentzian(r.lo), scenario, cfg).value;
  const double tc_hi = scenario_collapse_time(params, CutoffSpec::lorentzian(r.hi), scenario, cfg).value;
  if (tc_lo < tc_hi) throw Error(ErrorKind::NonMonotone, "t_C(omega_m) is not decreasing across the bracket");
  return r;
}

double small_omega_cutoff_law(const CollapseParams& params, const MeasurementScenario& scenario, double t_m) {
  const double k = white_cubic_coefficient(params, scenario);
  return 2.0 / (k * t_m * t_m * t_m * t_m);
}

BoundResult fluctuation_bound(const FluctuationMeasure& measure, double t_m, CutoffKind kind,
                              const SolverConfig& cfg) {
  cfg.validate();
  measure.validate();
  if (kind == CutoffKind::White) {
    throw Error(ErrorKind::WhiteNotNormalizable, "fluctuation measures need a finite cutoff");
  }
  if (!(t_m > 0.0)) throw Error(ErrorKind::InvalidArgument, "measurement time must be positive");
  // The normalized measures depend on omega_m t_m only; decreasing in omega_m.
  auto shortfall = [&](double omega) {
    return measure.threshold - normalized_measure(measure, CutoffSpec(kind, omega), t_m);
  };
  double lo = 1e-6 / t_m;
  double f_lo = shortfall(lo);
  if (f_lo >= 0.0) throw Error(ErrorKind::AlreadyCollapsing, "measure below threshold at the smallest cutoff probed");
  double hi = lo;
  double f_hi = f_lo;
  while (f_hi < 0.0) {
    if (hi * t_m >= 1e12) throw Error(ErrorKind::NoRootInBudget, "measure never drops below the threshold");
    lo = hi;
    f_lo = f_hi;
    hi *= cfg.growth;
    f_hi = shortfall(hi);
    if (f_hi < f_lo) throw Error(ErrorKind::NonMonotone, "fluctuation measure increases with the cutoff");
  }
  return bisect(shortfall, lo, hi, cfg, true);
}

double lambda_rescale(double t_c_white, double t_m) {
  if (!(t_c_white > 0.0) || !(t_m > 0.0)) throw Error(ErrorKind::InvalidArgument, "times must be positive");
  const double r = t_c_white / t_m;
  return r * r * r;
}

std::vector<CurvePoint> collapse_time_curve(const CollapseParams& params, const MeasurementScenario& scenario,
                                            const std::vector<double>& omega_grid, const SolverConfig& cfg) {
  std::vector<CurvePoint> out;
  out.reserve(omega_grid.size());
  for (double w : omega_grid) {
    out.push_back({w, scenario_collapse_time(params, CutoffSpec::lorentzian(w), scenario, cfg).value});
  }
  return out;
}

std::vector<CurvePoint> fluctuation_locus(const FluctuationMeasure& measure, CutoffKind kind,
                                          const std::vector<double>& omega_grid, const SolverConfig& cfg) {
  // measure(omega t) = threshold at a fixed product x*, so t = x* / omega.
  const double x_star = fluctuation_bound(measure, 1.0, kind, cfg).value;
  std::vector<CurvePoint> out;
  out.reserve(omega_grid.size());
  for (double w : omega_grid) {
    if (!(w > 0.0)) throw Error(ErrorKind::InvalidArgument, "cutoff grid must be positive");
    out.push_back({w, x_star / w});
  }
  return out;
}

}  // namespace cslb
