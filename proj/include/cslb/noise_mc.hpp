#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cslb/mc_estimate.hpp"
#include "cslb/spectral.hpp"

namespace cslb {

/// One sampled realization xi(k dt), k = 0..steps, of the collapse noise.
struct NoiseTrajectory {
  double dt = 0.0;
  std::vector<double> values;  // s^{-1/2}
  std::uint64_t seed = 0;
  CutoffSpec spec = CutoffSpec::white();

  double horizon() const { return dt * static_cast<double>(values.size() > 0 ? values.size() - 1 : 0); }
};

/// Stationary Ornstein-Uhlenbeck noise with correlator (omega_m/2) e^{-omega_m |tau|},
/// advanced by its exact AR(1) recursion. Throws ResolutionTooCoarse when
/// omega_m dt > 0.1.
NoiseTrajectory sample_lorentzian(double omega_m, double dt, std::int64_t steps, std::uint64_t seed);

/// Largest synthesized frequency: where the retained spectral mass of gamma
/// reaches 99.9% (exactly omega_m for the Heaviside kernel).
double spectral_cutoff(const CutoffSpec& spec);

/// Spectral synthesis xi(t) = sum_m sqrt(gamma(w_m) dw / pi) (a_m cos w_m t + b_m sin w_m t)
/// on the midpoint grid w_m = (m + 1/2) dw, dw = spectral_cutoff / n_modes.
/// The correlator repeats with period 2 pi / dw, so keep the horizon well below it.
NoiseTrajectory sample_spectral(const CutoffSpec& spec, double dt, std::int64_t steps, int n_modes,
                                std::uint64_t seed);

struct McConfig {
  int n_modes = 512;
  /// Time step bound in units of the fastest retained frequency.
  double max_omega_dt = 0.1;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// (t^2 / 2) E[xibar(t)^2] over an ensemble; xibar by the trapezoidal rule.
McEstimate estimate_lambda(const CutoffSpec& spec, double t, std::int64_t ensemble_size, std::uint64_t seed,
                           const McConfig& cfg = {});

/// E[xi(t) xibar(t)] over an ensemble.
McEstimate estimate_i(const CutoffSpec& spec, double t, std::int64_t ensemble_size, std::uint64_t seed,
                      const McConfig& cfg = {});

/// Writes "index,time,value" rows.
void write_trajectory_csv(const NoiseTrajectory& traj, std::ostream& out);

struct OracleCell {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double reference = 0.0;
  double z = 0.0;
  bool pass = false;
};

struct OracleSuiteResult {
  std::vector<OracleCell> sampler_checks;  // all must pass
  std::vector<OracleCell> closure_cells;   // at least 9 of 10 must pass
  int closure_passes() const;
  bool passed() const;
};

/// Lorentzian sampler variance and lag checks plus the ten preregistered
/// estimate_lambda / estimate_i cells, all at 3 sigma.
OracleSuiteResult run_oracle_suite(std::int64_t ensemble_size, std::uint64_t seed);

}  // namespace cslb
