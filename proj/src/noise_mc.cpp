#include "cslb/noise_mc.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "cslb/error.hpp"
#include "cslb/fluctuations.hpp"

namespace cslb {

namespace {

constexpr double kPi = std::numbers::pi;

template <typename Fn>
void parallel_for(std::int64_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, std::max<std::int64_t>(n, 1)));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < n; i += threads) fn(i);
    });
  }
}

// Trapezoidal (1/t) \int_0^t xi over equally spaced samples.
double trapezoid_mean(const std::vector<double>& v) {
  if (v.size() < 2) return v.empty() ? 0.0 : v.front();
  double s = 0.5 * (v.front() + v.back());
  for (std::size_t k = 1; k + 1 < v.size(); ++k) s += v[k];
  return s / static_cast<double>(v.size() - 1);
}

void lorentzian_fill(double omega_m, double dt, std::uint64_t stream, std::vector<double>& out) {
  std::mt19937_64 rng(stream);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double stationary_var = 0.5 * omega_m;
  const double alpha = std::exp(-omega_m * dt);
  const double kick = std::sqrt(stationary_var * -std::expm1(-2.0 * omega_m * dt));
  double x = std::sqrt(stationary_var) * normal(rng);
  out[0] = x;
  for (std::size_t k = 1; k < out.size(); ++k) {
    x = alpha * x + kick * normal(rng);
    out[k] = x;
  }
}

// Shared cos/sin tables for one (spec, dt, steps, n_modes) grid.
struct SpectralBasis {
  std::vector<double> amplitude;  // per mode
  std::vector<double> cos_table;  // [mode * n_times + k]
  std::vector<double> sin_table;
  std::size_t n_times = 0;

  SpectralBasis(const CutoffSpec& spec, double dt, std::int64_t steps, int n_modes) {
    const double w_max = spectral_cutoff(spec);
    const double dw = w_max / n_modes;
    n_times = static_cast<std::size_t>(steps) + 1;
    amplitude.resize(static_cast<std::size_t>(n_modes));
    cos_table.resize(amplitude.size() * n_times);
    sin_table.resize(amplitude.size() * n_times);
    for (int m = 0; m < n_modes; ++m) {
      const double w = (m + 0.5) * dw;
      amplitude[static_cast<std::size_t>(m)] = std::sqrt(gamma_of_omega(spec, w) * dw / kPi);
      for (std::size_t k = 0; k < n_times; ++k) {
        const double phase = w * dt * static_cast<double>(k);
        cos_table[static_cast<std::size_t>(m) * n_times + k] = std::cos(phase);
        sin_table[static_cast<std::size_t>(m) * n_times + k] = std::sin(phase);
      }
    }
  }

  void fill(std::uint64_t stream, std::vector<double>& out) const {
    std::mt19937_64 rng(stream);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t m = 0; m < amplitude.size(); ++m) {
      const double a = amplitude[m] * normal(rng);
      const double b = amplitude[m] * normal(rng);
      const double* c = &cos_table[m * n_times];
      const double* s = &sin_table[m * n_times];
      for (std::size_t k = 0; k < n_times; ++k) out[k] += a * c[k] + b * s[k];
    }
  }
};

void check_spectral_args(const CutoffSpec& spec, double dt, std::int64_t steps, int n_modes) {
  if (spec.is_white()) throw Error(ErrorKind::WhiteNotSamplable, "white noise has no pointwise samples");
  if (!(dt > 0.0) || steps < 1 || n_modes < 1) {
    throw Error(ErrorKind::InvalidArgument, "need dt > 0, steps >= 1 and n_modes >= 1");
  }
}

enum class Statistic { Lambda, ICorrelation };

McEstimate ensemble_estimate(Statistic stat, const CutoffSpec& spec, double t, std::int64_t ensemble_size,
                             std::uint64_t seed, const McConfig& cfg) {
  if (spec.is_white()) throw Error(ErrorKind::WhiteNotSamplable, "white noise has no pointwise samples");
  if (!(t > 0.0) || ensemble_size < 2) {
    throw Error(ErrorKind::InvalidArgument, "need t > 0 and at least two ensemble members");
  }
  if (!(cfg.max_omega_dt > 0.0 && cfg.max_omega_dt <= 0.1)) {
    throw Error(ErrorKind::ResolutionTooCoarse, "max_omega_dt must lie in (0, 0.1]");
  }
  const bool exact_ou = spec.kind() == CutoffKind::Lorentzian;
  const double fastest = exact_ou ? spec.omega_m() : spectral_cutoff(spec);
  const auto steps = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(t * fastest / cfg.max_omega_dt)));
  const double dt = t / static_cast<double>(steps);

  std::optional<SpectralBasis> basis;
  if (!exact_ou) basis.emplace(spec, dt, steps, cfg.n_modes);

  std::vector<double> results(static_cast<std::size_t>(ensemble_size));
  unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, ensemble_size));
  // One scratch buffer per worker; member i writes only results[i].
  std::vector<std::vector<double>> scratch(threads, std::vector<double>(static_cast<std::size_t>(steps) + 1));
  parallel_for(threads, threads, [&](std::int64_t w) {
    auto& buf = scratch[static_cast<std::size_t>(w)];
    for (std::int64_t i = w; i < ensemble_size; i += threads) {
      const std::uint64_t stream = stream_seed(seed, static_cast<std::uint64_t>(i));
      if (exact_ou) {
        lorentzian_fill(spec.omega_m(), dt, stream, buf);
      } else {
        basis->fill(stream, buf);
      }
      const double avg = trapezoid_mean(buf);
      results[static_cast<std::size_t>(i)] = stat == Statistic::Lambda ? 0.5 * t * t * avg * avg : buf.back() * avg;
    }
  });
  return summarize(results);
}

}  // namespace

NoiseTrajectory sample_lorentzian(double omega_m, double dt, std::int64_t steps, std::uint64_t seed) {
  if (!(omega_m > 0.0) || !(dt > 0.0) || steps < 1) {
    throw Error(ErrorKind::InvalidArgument, "need omega_m > 0, dt > 0 and steps >= 1");
  }
  if (omega_m * dt > 0.1) throw Error(ErrorKind::ResolutionTooCoarse, "omega_m dt must not exceed 0.1");
  NoiseTrajectory traj;
  traj.dt = dt;
  traj.seed = seed;
  traj.spec = CutoffSpec::lorentzian(omega_m);
  traj.values.resize(static_cast<std::size_t>(steps) + 1);
  lorentzian_fill(omega_m, dt, stream_seed(seed, 0), traj.values);
  return traj;
}

double spectral_cutoff(const CutoffSpec& spec) {
  const double wm = spec.omega_m();
  switch (spec.kind()) {
    case CutoffKind::Heaviside: return wm;
    case CutoffKind::GaussianExp: return 2.326753765513525 * wm;  // erf^{-1}(0.999)
    case CutoffKind::Exponential: return std::log(1000.0) * wm;
    case CutoffKind::Lorentzian: return std::tan(0.4995 * kPi) * wm;
    case CutoffKind::White: break;
  }
  throw Error(ErrorKind::WhiteNotSamplable, "white noise has no finite spectral support");
}

NoiseTrajectory sample_spectral(const CutoffSpec& spec, double dt, std::int64_t steps, int n_modes,
                                std::uint64_t seed) {
  check_spectral_args(spec, dt, steps, n_modes);
  const SpectralBasis basis(spec, dt, steps, n_modes);
  NoiseTrajectory traj;
  traj.dt = dt;
  traj.seed = seed;
  traj.spec = spec;
  traj.values.resize(static_cast<std::size_t>(steps) + 1);
  basis.fill(stream_seed(seed, 0), traj.values);
  return traj;
}

McEstimate estimate_lambda(const CutoffSpec& spec, double t, std::int64_t ensemble_size, std::uint64_t seed,
                           const McConfig& cfg) {
  return ensemble_estimate(Statistic::Lambda, spec, t, ensemble_size, seed, cfg);
}

McEstimate estimate_i(const CutoffSpec& spec, double t, std::int64_t ensemble_size, std::uint64_t seed,
                      const McConfig& cfg) {
  return ensemble_estimate(Statistic::ICorrelation, spec, t, ensemble_size, seed, cfg);
}

void write_trajectory_csv(const NoiseTrajectory& traj, std::ostream& out) {
  out << "index,time,value\n";
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::scientific << std::setprecision(8);
  for (std::size_t k = 0; k < traj.values.size(); ++k) {
    out << k << ',' << traj.dt * static_cast<double>(k) << ',' << traj.values[k] << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

int OracleSuiteResult::closure_passes() const {
  return static_cast<int>(std::count_if(closure_cells.begin(), closure_cells.end(),
                                        [](const OracleCell& c) { return c.pass; }));
}

bool OracleSuiteResult::passed() const {
  const bool samplers_ok = std::all_of(sampler_checks.begin(), sampler_checks.end(),
                                       [](const OracleCell& c) { return c.pass; });
  return samplers_ok && closure_passes() >= 9;
}

namespace {

OracleCell make_cell(std::string name, const McEstimate& est, double reference) {
  OracleCell c;
  c.name = std::move(name);
  c.estimate = est.mean;
  c.std_error = est.std_error;
  c.reference = reference;
  c.z = est.z_score(reference);
  c.pass = c.z <= 3.0;
  return c;
}

// Batch means over one long trajectory: mean of x_j x_{j+lag}, with the
// standard error taken from independent-enough batches.
McEstimate lagged_product(const std::vector<double>& x, std::size_t lag, std::size_t batches) {
  const std::size_t n = x.size() - lag;
  const std::size_t per = n / batches;
  std::vector<double> means(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    double s = 0.0;
    for (std::size_t j = b * per; j < (b + 1) * per; ++j) s += x[j] * x[j + lag];
    means[b] = s / static_cast<double>(per);
  }
  return summarize(means);
}

}  // namespace

OracleSuiteResult run_oracle_suite(std::int64_t ensemble_size, std::uint64_t seed) {
  OracleSuiteResult out;

  // Long stationary OU run: omega_m = 1e4, dt = 1e-6, 1e6 steps.
  {
    const double wm = 1e4;
    const double dt = 1e-6;
    const auto traj = sample_lorentzian(wm, dt, 1'000'000, seed);
    const double v = 0.5 * wm;
    for (std::size_t lag : {std::size_t{0}, std::size_t{100}, std::size_t{300}}) {
      const auto est = lagged_product(traj.values, lag, 100);
      const double reference = v * std::exp(-wm * dt * static_cast<double>(lag));
      out.sampler_checks.push_back(make_cell("ou lag " + std::to_string(lag) + " (k dt omega_m = " +
                                                 std::to_string(static_cast<int>(lag) / 100) + ")",
                                             est, reference));
    }
  }

  struct Cell {
    const char* what;
    CutoffSpec spec;
    double t;
  };
  const Cell cells[] = {
      {"lambda", CutoffSpec::lorentzian(1e4), 1e-4},  {"i", CutoffSpec::lorentzian(1e4), 1e-4},
      {"lambda", CutoffSpec::lorentzian(1e5), 1e-5},  {"i", CutoffSpec::lorentzian(1e6), 1e-5},
      {"lambda", CutoffSpec::gaussian_exp(1e4), 1e-4}, {"i", CutoffSpec::gaussian_exp(1e4), 3e-4},
      {"lambda", CutoffSpec::exponential(1e4), 1e-4}, {"i", CutoffSpec::exponential(1e4), 1e-4},
      {"lambda", CutoffSpec::heaviside(1e4), 1e-4},   {"i", CutoffSpec::heaviside(1e4), 2e-4},
  };
  std::uint64_t cell_seed = seed;
  for (const auto& c : cells) {
    cell_seed = stream_seed(cell_seed, 0x5eed);
    const bool is_lambda = std::string_view(c.what) == "lambda";
    const auto est = is_lambda ? estimate_lambda(c.spec, c.t, ensemble_size, cell_seed)
                               : estimate_i(c.spec, c.t, ensemble_size, cell_seed);
    const double reference = is_lambda ? lambda_big(c.spec, c.t) : i_tilde(c.spec, c.t);
    std::ostringstream name;
    name << c.what << ' ' << c.spec.describe() << " t=" << c.t;
    out.closure_cells.push_back(make_cell(name.str(), est, reference));
  }
  return out;
}

}  // namespace cslb
