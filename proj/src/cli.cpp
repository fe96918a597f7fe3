#include "cslb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "cslb/bounds.hpp"
#include "cslb/config.hpp"
#include "cslb/error.hpp"
#include "cslb/fluctuations.hpp"
#include "cslb/noise_mc.hpp"
#include "cslb/scenarios.hpp"

namespace cslb::cli {

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

namespace {

struct Options {
  std::string config_path;
  std::optional<double> lambda;
  std::optional<double> r_c;
  std::string cutoff;
  std::string omega_m;
  std::string preset;
  std::optional<double> current;
  std::string t_m;
  std::string t_grid;
  std::string omega_grid;
  std::string output;
  std::string measure = "both";
  std::optional<double> threshold;
  std::optional<std::int64_t> ensemble;
  std::optional<std::uint64_t> seed;
  std::string dump_trajectory;
  bool all_kinds = false;
  bool momentum_correction = false;
};

void require_curve_value(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw Error(ErrorKind::InvariantViolation, std::string(what) + " is negative or not finite: " + sci(v));
  }
}

// CSV sink: the --output file when given, otherwise the command's stdout.
class CsvSink {
 public:
  CsvSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& os() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

RunConfig build_config(const Options& o) {
  RunConfig cfg;
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') path = env;
  }
  if (!path.empty()) cfg.apply(ConfigFile::load(path));

  if (o.lambda) cfg.collapse.lambda = *o.lambda;
  if (o.r_c) cfg.collapse.r_c = *o.r_c;
  if (!o.cutoff.empty()) {
    const auto kind = parse_cutoff_kind(o.cutoff);
    if (!kind) throw Error(ErrorKind::InvalidArgument, "unknown cutoff kind '" + o.cutoff + "'");
    cfg.cutoff_kind = *kind;
  }
  if (!o.omega_m.empty()) cfg.omega_m = parse_grid(o.omega_m).front();
  if (!o.preset.empty()) {
    const auto p = find_preset(o.preset);
    if (!p) throw Error(ErrorKind::InvalidArgument, "unknown preset '" + o.preset + "'");
    cfg.scenario = *p;
  }
  if (o.current) cfg.scenario.i_electric = *o.current;
  if (o.momentum_correction) cfg.scenario.battery = cfg.scenario.battery.with_momentum_correction();
  if (o.threshold) cfg.measure.threshold = *o.threshold;
  if (o.ensemble) cfg.mc.ensemble = *o.ensemble;
  if (o.seed) cfg.mc.seed = *o.seed;
  cfg.collapse.validate();
  cfg.scenario.validate();
  cfg.measure.validate();
  if (cfg.mc.ensemble < 2) throw Error(ErrorKind::InvalidArgument, "ensemble must hold at least two members");
  return cfg;
}

int cmd_lambda_curve(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const auto t_grid = parse_grid(o.t_grid.empty() ? "log:1e-12:1e-3:200" : o.t_grid);
  std::vector<double> omegas;
  if (!o.omega_m.empty()) {
    omegas = parse_grid(o.omega_m);
  } else if (o.all_kinds) {
    omegas = {1e4};
  } else {
    omegas = {1e6, 1e8, 4e10};
  }
  std::vector<CutoffSpec> curves{CutoffSpec::white()};
  std::vector<CutoffKind> kinds;
  if (o.all_kinds) {
    kinds = {CutoffKind::Heaviside, CutoffKind::GaussianExp, CutoffKind::Exponential, CutoffKind::Lorentzian};
  } else if (cfg.cutoff_kind != CutoffKind::White) {
    kinds = {cfg.cutoff_kind};
  }
  for (double w : omegas)
    for (auto k : kinds) curves.emplace_back(k, w);

  CsvSink sink(o.output, out);
  auto& os = sink.os();
  os << "t";
  for (const auto& c : curves) {
    os << ',' << to_string(c.kind());
    if (!c.is_white()) os << ':' << sci(c.omega_m());
  }
  os << '\n';
  for (double t : t_grid) {
    os << sci(t);
    for (const auto& c : curves) {
      const double v = lambda_big(c, t);
      require_curve_value(v, "Lambda(t)");
      os << ',' << sci(v);
    }
    os << '\n';
  }
  return kSuccess;
}

int cmd_collapse_time(const RunConfig& cfg, std::ostream& out) {
  const auto spec = cfg.cutoff();
  const auto r = scenario_collapse_time(cfg.collapse, spec, cfg.scenario, cfg.solver);
  out << "scenario: " << cfg.scenario.label << " (I = " << sci(cfg.scenario.i_electric) << " A)\n";
  out << "cutoff: " << spec.describe() << '\n';
  out << "t_C = " << sci(r.value) << " s\n";
  out << "bracket = [" << sci(r.lo) << ", " << sci(r.hi) << "], iterations = " << r.iterations
      << ", residual = " << sci(r.residual) << '\n';
  if (spec.is_white()) {
    out << "t_C (cube-root law) = " << sci(white_collapse_time_analytic(cfg.collapse, cfg.scenario)) << " s\n";
  }
  const double t_m = cfg.scenario.measurement_time();
  out << "t_M = " << sci(t_m) << " s -> " << (r.value <= t_m ? "collapses within t_M" : "does not collapse within t_M")
      << '\n';
  return kSuccess;
}

std::vector<MeasurementScenario> bound_scenarios(const Options& o, const RunConfig& cfg) {
  if (!o.preset.empty() || o.current) return {cfg.scenario};
  std::vector<MeasurementScenario> out;
  for (const auto& name : {"nand-13.8mA", "flash-500mA"}) {
    auto s = *find_preset(name);
    if (o.momentum_correction) s.battery = s.battery.with_momentum_correction();
    out.push_back(s);
  }
  return out;
}

int cmd_cutoff_bound(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const auto t_ms = parse_grid(o.t_m.empty() ? "1e-5,1e-4" : o.t_m);
  const auto grid = parse_grid(o.omega_grid.empty() ? "log:1e-3:1e11:57" : o.omega_grid);
  const auto scenarios = bound_scenarios(o, cfg);

  CsvSink sink(o.output, out);
  auto& os = sink.os();
  os << "# heating_upper_bound_omega_m," << sci(cfg.heating_upper_bound) << '\n';
  for (double t_m : t_ms) os << "# t_m," << sci(t_m) << '\n';
  for (const auto& s : scenarios) {
    for (double t_m : t_ms) {
      const auto b = cutoff_lower_bound(cfg.collapse, s, t_m, cfg.solver);
      os << "# omega_star," << s.label << ',' << sci(t_m) << ',' << sci(b.value) << ",small_omega_law,"
         << sci(small_omega_cutoff_law(cfg.collapse, s, t_m)) << '\n';
    }
  }
  os << "omega_m";
  for (const auto& s : scenarios) os << ",t_c:" << s.label;
  os << '\n';
  std::vector<std::vector<CurvePoint>> curves;
  for (const auto& s : scenarios) curves.push_back(collapse_time_curve(cfg.collapse, s, grid, cfg.solver));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << sci(grid[i]);
    for (const auto& c : curves) {
      require_curve_value(c[i].t, "t_C");
      os << ',' << sci(c[i].t);
    }
    os << '\n';
  }
  return kSuccess;
}

int cmd_fluct_bound(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const auto t_ms = parse_grid(o.t_m.empty() ? "1e-4" : o.t_m);
  std::vector<MeasureKind> kinds;
  if (o.measure == "I" || o.measure == "both") kinds.push_back(MeasureKind::I);
  if (o.measure == "J" || o.measure == "both") kinds.push_back(MeasureKind::J);
  if (kinds.empty()) throw Error(ErrorKind::InvalidArgument, "--measure must be I, J or both");
  const CutoffKind kind = cfg.cutoff_kind == CutoffKind::White ? CutoffKind::Lorentzian : cfg.cutoff_kind;

  for (double t_m : t_ms) {
    for (auto k : kinds) {
      const FluctuationMeasure m{k, cfg.measure.threshold};
      const auto b = fluctuation_bound(m, t_m, kind, cfg.solver);
      out << (k == MeasureKind::I ? "I" : "J") << " = " << cfg.measure.threshold << " at t_M = " << sci(t_m)
          << " s: omega_m >= " << sci(b.value) << " 1/s (omega_m t_M = " << sci(b.value * t_m) << ")\n";
    }
  }
  if (!o.output.empty()) {
    const auto grid = parse_grid(o.omega_grid.empty() ? "log:1e-3:1e11:57" : o.omega_grid);
    CsvSink sink(o.output, out);
    auto& os = sink.os();
    os << "# heating_upper_bound_omega_m," << sci(cfg.heating_upper_bound) << '\n';
    os << "omega_m";
    std::vector<std::vector<CurvePoint>> loci;
    for (auto k : kinds) {
      os << (k == MeasureKind::I ? ",t_I" : ",t_J");
      loci.push_back(fluctuation_locus({k, cfg.measure.threshold}, kind, grid, cfg.solver));
    }
    os << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
      os << sci(grid[i]);
      for (const auto& l : loci) {
        require_curve_value(l[i].t, "threshold time");
        os << ',' << sci(l[i].t);
      }
      os << '\n';
    }
  }
  return kSuccess;
}

int cmd_heating(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const double current = o.current.value_or(cfg.heating_current);
  const double t = o.t_m.empty() ? kPublishedHeatingTime : parse_grid(o.t_m).front();
  const auto spec = cfg.cutoff();
  const auto r = heating_chain(cfg.collapse, spec, cfg.wire, current, t, t);
  const auto pub = heating_chain_published(cfg.collapse, spec, cfg.wire, current);
  out << "current I        = " << sci(current) << " A\n";
  out << "volume V         = " << sci(r.volume) << " m^3\n";
  out << "copper atoms N   = " << sci(r.atoms) << '\n';
  out << "resistance R     = " << sci(r.resistance) << " Ohm\n";
  out << "power P          = " << sci(r.power) << " W\n";
  out << "temperature dT   = " << sci(r.delta_t) << " K (after " << sci(t) << " s)\n";
  out << "thermal x_r      = " << sci(r.x_r) << " m\n";
  out << "displacement     = " << sci(r.displacement) << " m\n";
  out << "Gamma            = " << sci(r.gamma) << " (Lambda at " << sci(t) << " s)\n";
  out << "Gamma (published pairing: dT after " << sci(pub.heating_time) << " s, Lambda at "
      << sci(pub.collapse_time) << " s) = " << sci(pub.gamma) << '\n';
  return kSuccess;
}

int cmd_ions(const Options& o, const RunConfig& cfg, std::ostream& out) {
  std::vector<MeasurementScenario> list;
  if (!o.preset.empty() || o.current) {
    list.push_back(cfg.scenario);
  } else {
    list = scenario_presets();
  }
  for (const auto& s : list) {
    out << s.label << ": I = " << sci(s.i_electric) << " A, N = "
        << sci(ions_displaced(s.i_electric, s.battery.h_electrolyte, s.battery.v_drift)) << '\n';
  }
  return kSuccess;
}

int cmd_mc_verify(const Options& o, const RunConfig& cfg, std::ostream& out) {
  if (!o.dump_trajectory.empty()) {
    const auto traj = sample_lorentzian(cfg.omega_m, 0.1 / cfg.omega_m, 1000, cfg.mc.seed);
    std::ofstream f(o.dump_trajectory);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.dump_trajectory);
    write_trajectory_csv(traj, f);
  }
  const auto res = run_oracle_suite(cfg.mc.ensemble, cfg.mc.seed);
  auto line = [&](const OracleCell& c) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": estimate " << sci(c.estimate) << " +- "
        << sci(c.std_error) << ", analytic " << sci(c.reference) << ", z = " << std::fixed
        << std::setprecision(2) << c.z << std::defaultfloat << std::setprecision(6) << '\n';
  };
  for (const auto& c : res.sampler_checks) line(c);
  for (const auto& c : res.closure_cells) line(c);
  out << "closure cells within 3 sigma: " << res.closure_passes() << "/" << res.closure_cells.size() << '\n';
  out << (res.passed() ? "mc-verify: PASS\n" : "mc-verify: FAIL\n");
  return res.passed() ? kSuccess : kMcFailure;
}

struct ReportRow {
  std::string name;
  double computed;
  double published;
  // Relative tolerance, or a multiplicative factor when `factor` is set.
  double tolerance;
  bool factor = false;
  std::string annotation;
};

ReportRow row(std::string name, double computed, double published, double tolerance, bool factor = false,
              std::string annotation = {}) {
  return {std::move(name), computed, published, tolerance, factor, std::move(annotation)};
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  const auto& p = cfg.collapse;
  const auto nand = *find_preset("nand-13.8mA");
  const auto flash = *find_preset("flash-500mA");
  const auto detect = *find_preset("detection-2mA");
  const auto white = CutoffSpec::white();
  auto n_of = [](const MeasurementScenario& s) {
    return ions_displaced(s.i_electric, s.battery.h_electrolyte, s.battery.v_drift);
  };
  const double tc_detect = scenario_collapse_time(p, white, detect, cfg.solver).value;
  const double tc_nand = scenario_collapse_time(p, white, nand, cfg.solver).value;
  const double tc_flash = scenario_collapse_time(p, white, flash, cfg.solver).value;
  const double tc_nand_slow_pf6 =
      scenario_collapse_time(p, white, [&] { auto s = nand; s.battery = s.battery.with_momentum_correction(); return s; }(),
                             cfg.solver)
          .value;
  const auto heat = heating_chain(p, white, cfg.wire, 0.5, kPublishedHeatingTime, kPublishedHeatingTime);
  const auto heat_pub = heating_chain_published(p, white, cfg.wire, 0.5);
  const FluctuationMeasure i_meas{MeasureKind::I, 0.1};
  const FluctuationMeasure j_meas{MeasureKind::J, 0.1};

  std::vector<ReportRow> rows{
      row("ions N (2 mA)", n_of(detect), 4.46e18, 0.01),
      row("ions N (13.8 mA)", n_of(nand), 3.08e19, 0.01),
      row("ions N (500 mA)", n_of(flash), 1.11e21, 0.01),
      row("t_C white (2 mA) [s]", tc_detect, 8.16e-6, 0.01),
      row("t_C white (500 mA) [s]", tc_flash, 1.30e-6, 0.01),
      row("t_C white (13.8 mA) [s]", tc_nand, 4.29e-6, 0.01),
      row("slow PF6- t_C factor (13.8 mA)", tc_nand_slow_pf6 / tc_nand, 2.7, 0.05),
      row("omega_M bound (13.8 mA, t_M=1e-4) [1/s]", cutoff_lower_bound(p, nand, 1e-4, cfg.solver).value, 1.0, 2.0, true),
      row("omega_M bound (500 mA, t_M=1e-4) [1/s]", cutoff_lower_bound(p, flash, 1e-4, cfg.solver).value, 5e-2, 2.0, true),
      row("omega_M bound (13.8 mA, t_M=1e-5) [1/s]", cutoff_lower_bound(p, nand, 1e-5, cfg.solver).value, 1e4, 2.0, true),
      row("omega_M bound (500 mA, t_M=1e-5) [1/s]", cutoff_lower_bound(p, flash, 1e-5, cfg.solver).value, 5e2, 2.0, true),
      row("lambda factor (500 mA, t_M=1e-5)", lambda_rescale(tc_flash, 1e-5), 2.2e-3, 0.03),
      row("lambda factor (13.8 mA, t_M=1e-5)", lambda_rescale(tc_nand, 1e-5), 7.9e-2, 0.03),
      row("lambda factor (500 mA, t_M=1e-4)", lambda_rescale(tc_flash, 1e-4), 2.2e-6, 0.03),
      row("lambda factor (13.8 mA, t_M=1e-4)", lambda_rescale(tc_nand, 1e-4), 7.9e-6, 0.03,
       false, "printed value is 10x below (t_C/t_M)^3 = 7.9e-5; likely exponent typo"),
      row("omega_M bound, I = 0.1 (t_M=1e-4) [1/s]", fluctuation_bound(i_meas, 1e-4, CutoffKind::Lorentzian, cfg.solver).value, 1e5, 0.05),
      row("omega_M bound, I = 0.1 (t_M=1e-5) [1/s]", fluctuation_bound(i_meas, 1e-5, CutoffKind::Lorentzian, cfg.solver).value, 1e6, 0.05),
      row("omega_M t_M, J = 0.1", fluctuation_bound(j_meas, 1.0, CutoffKind::Lorentzian, cfg.solver).value, 18.94, 0.001),
      row("wire volume V [m^3]", heat.volume, 3.14e-8, 0.01),
      row("copper atoms N_Cu", heat.atoms, 2.67e21, 0.01),
      row("wire resistance R [Ohm]", heat.resistance, 5.35e-5, 0.01),
      row("dissipated power P [W]", heat.power, 1.34e-5, 0.01),
      row("temperature rise dT [K]", heat.delta_t, 1.24e-8, 0.01),
      row("thermal displacement x_r [m]", heat.x_r, 2e-11, 0.15),
      row("phonon displacement [m]", heat.displacement, 4e-22, 0.20),
      row("heating Gamma (published pairing)", heat_pub.gamma, 4.3e-21, 0.10),
      row("heating Gamma (Lambda at 1e-4 s)", heat.gamma, 4.3e-21, 0.10, false,
       "published 4.3e-21 needs Lambda at 1e-8 s; consistent timing gives ~4e-17, still negligible"),
  };

  out << std::left << std::setw(44) << "quantity" << std::setw(18) << "computed" << std::setw(18) << "published"
      << std::setw(12) << "rel.dev" << "status\n";
  int deviations = 0;
  for (const auto& r : rows) {
    const double rel = (r.computed - r.published) / r.published;
    const double ratio = r.computed / r.published;
    const bool within = r.factor ? (ratio <= r.tolerance && ratio >= 1.0 / r.tolerance) : std::abs(rel) <= r.tolerance;
    std::string status = within ? "OK" : "DEVIATES";
    if (!r.annotation.empty()) status = "ANNOTATED";
    if (status == "DEVIATES") ++deviations;
    char rel_buf[32];
    std::snprintf(rel_buf, sizeof rel_buf, "%+.3f", rel);
    out << std::setw(44) << r.name << std::setw(18) << sci(r.computed) << std::setw(18) << sci(r.published)
        << std::setw(12) << rel_buf << status;
    if (!r.annotation.empty()) out << "  (" << r.annotation << ")";
    out << '\n';
  }
  out << "deviations: " << deviations << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cutoff bounds for colored-noise CSL collapse", "cslb"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "TOML-style config file (default: $CSLB_CONFIG)");
    sub->add_option("--lambda", o.lambda, "collapse rate lambda [1/s]");
    sub->add_option("--r-c", o.r_c, "correlation length r_C [m]");
    sub->add_option("--cutoff", o.cutoff, "white, heaviside, gaussian-exp, exponential or lorentzian");
    sub->add_option("--omega-m", o.omega_m, "cutoff frequency [1/s] (lists/grids where accepted)");
    sub->add_option("--preset", o.preset, "detection-2mA, nand-13.8mA or flash-500mA");
    sub->add_option("--current", o.current, "electric current [A]");
    sub->add_flag("--momentum-correction", o.momentum_correction, "PF6- drifts at v/20");
    sub->add_option("--output,-o", o.output, "CSV output path");
  };

  auto* lambda_curve = app.add_subcommand("lambda-curve", "Lambda(t) curves as CSV");
  common(lambda_curve);
  lambda_curve->add_option("--t-grid", o.t_grid, "time grid, e.g. log:1e-12:1e-3:200");
  lambda_curve->add_flag("--all-kinds", o.all_kinds, "every cutoff kind at each omega_m");

  auto* collapse = app.add_subcommand("collapse-time", "collapse time t_C of a scenario");
  common(collapse);

  auto* cutoff_bound = app.add_subcommand("cutoff-bound", "t_C(omega_m) curves and cutoff lower bounds");
  common(cutoff_bound);
  cutoff_bound->add_option("--t-m", o.t_m, "measurement time(s) [s]");
  cutoff_bound->add_option("--omega-grid", o.omega_grid, "omega_m grid, e.g. log:1e-3:1e11:57");

  auto* fluct = app.add_subcommand("fluct-bound", "fluctuation-threshold cutoff bounds");
  common(fluct);
  fluct->add_option("--t-m", o.t_m, "measurement time(s) [s]");
  fluct->add_option("--measure", o.measure, "I, J or both")->check(CLI::IsMember({"I", "J", "both"}));
  fluct->add_option("--threshold", o.threshold, "threshold in (0, 1)");
  fluct->add_option("--omega-grid", o.omega_grid, "omega_m grid of the threshold loci");

  auto* heating = app.add_subcommand("heating", "wire heating chain");
  common(heating);
  heating->add_option("--t-m", o.t_m, "heating time [s]");

  auto* ions = app.add_subcommand("ions", "ions displaced in the battery");
  common(ions);

  auto* mc = app.add_subcommand("mc-verify", "Monte-Carlo oracle suite");
  common(mc);
  mc->add_option("--ensemble", o.ensemble, "ensemble size");
  mc->add_option("--seed", o.seed, "random seed");
  mc->add_option("--dump-trajectory", o.dump_trajectory, "write one Lorentzian trajectory as CSV");

  auto* report = app.add_subcommand("report", "every reproduced number against its published value");
  common(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const RunConfig cfg = build_config(o);
    if (lambda_curve->parsed()) return cmd_lambda_curve(o, cfg, out);
    if (collapse->parsed()) return cmd_collapse_time(cfg, out);
    if (cutoff_bound->parsed()) return cmd_cutoff_bound(o, cfg, out);
    if (fluct->parsed()) return cmd_fluct_bound(o, cfg, out);
    if (heating->parsed()) return cmd_heating(o, cfg, out);
    if (ions->parsed()) return cmd_ions(o, cfg, out);
    if (mc->parsed()) return cmd_mc_verify(o, cfg, out);
    if (report->parsed()) return cmd_report(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_solver_error() ? kSolverError : kUsageError;
  }
  return kUsageError;
}

}  // namespace cslb::cli
