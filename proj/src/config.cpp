#include "cslb/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cslb/error.hpp"

namespace cslb {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Drops a trailing # comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::optional<double> to_double(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  std::istringstream is(t);
  is.imbue(std::locale::classic());
  double v = 0.0;
  is >> v;
  if (is.fail() || !is.eof()) return std::nullopt;
  return v;
}

std::string unquote(const std::string& raw) {
  const std::string t = trim(raw);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
  return t;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& expected) {
  throw Error(ErrorKind::InvalidArgument, "config key '" + key + "' must be " + expected);
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& in, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::string section;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') {
        throw Error(ErrorKind::InvalidArgument, origin + ":" + std::to_string(line_no) + ": unterminated section");
      }
      section = trim(std::string_view(body).substr(1, body.size() - 2));
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, origin + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw Error(ErrorKind::InvalidArgument, origin + ":" + std::to_string(line_no) + ": empty key");
    cfg.values_[section.empty() ? key : section + "." + key] = value;
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config file " + path.string());
  return parse(in, path.string());
}

std::optional<std::string> ConfigFile::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return unquote(it->second);
}

std::optional<double> ConfigFile::get_double(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  const auto v = to_double(unquote(it->second));
  if (!v) bad_value(key, "a number");
  return v;
}

std::optional<std::int64_t> ConfigFile::get_int(const std::string& key) const {
  const auto v = get_double(key);
  if (!v) return std::nullopt;
  if (std::floor(*v) != *v) bad_value(key, "an integer");
  return static_cast<std::int64_t>(*v);
}

std::optional<bool> ConfigFile::get_bool(const std::string& key) const {
  const auto s = get_string(key);
  if (!s) return std::nullopt;
  if (*s == "true") return true;
  if (*s == "false") return false;
  bad_value(key, "true or false");
}

std::optional<std::vector<double>> ConfigFile::get_list(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  std::string t = trim(it->second);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') bad_value(key, "a [a, b, ...] list");
  std::vector<double> out;
  std::istringstream is(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto v = to_double(item);
    if (!v) bad_value(key, "a list of numbers");
    out.push_back(*v);
  }
  return out;
}

CutoffSpec RunConfig::cutoff() const {
  return cutoff_kind == CutoffKind::White ? CutoffSpec::white() : CutoffSpec(cutoff_kind, omega_m);
}

void RunConfig::apply(const ConfigFile& file) {
  static const std::set<std::string> known{
      "collapse.lambda",       "collapse.r_c",          "collapse.m0",
      "cutoff.kind",           "cutoff.omega_m",        "scenario.preset",
      "scenario.label",        "scenario.current",      "scenario.t_detect",
      "scenario.t_amplify",    "scenario.t_record",     "scenario.t_pulse",
      "scenario.time_mode",    "scenario.v_drift",      "scenario.h_electrolyte",
      "scenario.momentum_correction", "solver.rel_tol", "solver.max_iterations",
      "solver.growth",         "solver.t_floor",        "solver.t_ceiling",
      "solver.omega_floor",    "solver.omega_ceiling",  "mc.ensemble",
      "mc.seed",               "mc.n_modes",            "fluct.threshold",
      "fluct.measure",         "heating.current",       "heating.upper_bound",
      "wire.length",           "wire.radius",           "wire.resistivity",
      "wire.mass_density",     "wire.atomic_mass",      "wire.heat_capacity",
      "wire.debye_temperature", "wire.reference_temperature", "wire.nucleons_per_atom",
  };
  for (const auto& [key, value] : file.entries()) {
    if (!known.count(key)) throw Error(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
  }

  auto set = [&](const char* key, double& target) {
    if (auto v = file.get_double(key)) target = *v;
  };
  set("collapse.lambda", collapse.lambda);
  set("collapse.r_c", collapse.r_c);
  set("collapse.m0", collapse.m0);

  if (auto k = file.get_string("cutoff.kind")) {
    const auto parsed = parse_cutoff_kind(*k);
    if (!parsed) bad_value("cutoff.kind", "one of white, heaviside, gaussian-exp, exponential, lorentzian");
    cutoff_kind = *parsed;
  }
  set("cutoff.omega_m", omega_m);

  // A preset replaces the whole scenario; individual keys then refine it.
  if (auto name = file.get_string("scenario.preset")) {
    const auto preset = find_preset(*name);
    if (!preset) bad_value("scenario.preset", "a known preset name");
    scenario = *preset;
  }
  if (auto label = file.get_string("scenario.label")) scenario.label = *label;
  set("scenario.current", scenario.i_electric);
  set("scenario.t_detect", scenario.t_detect);
  set("scenario.t_amplify", scenario.t_amplify);
  set("scenario.t_record", scenario.t_record);
  set("scenario.t_pulse", scenario.t_pulse);
  set("scenario.v_drift", scenario.battery.v_drift);
  set("scenario.h_electrolyte", scenario.battery.h_electrolyte);
  if (auto mode = file.get_string("scenario.time_mode")) {
    if (*mode == "record") scenario.time_mode = MeasurementTimeMode::Record;
    else if (*mode == "stage-sum") scenario.time_mode = MeasurementTimeMode::StageSum;
    else if (*mode == "detection") scenario.time_mode = MeasurementTimeMode::Detection;
    else bad_value("scenario.time_mode", "record, stage-sum or detection");
  }
  if (file.get_bool("scenario.momentum_correction").value_or(false)) {
    scenario.battery = scenario.battery.with_momentum_correction();
  }

  set("solver.rel_tol", solver.rel_tol);
  if (auto v = file.get_int("solver.max_iterations")) solver.max_iterations = static_cast<int>(*v);
  set("solver.growth", solver.growth);
  set("solver.t_floor", solver.t_floor);
  set("solver.t_ceiling", solver.t_ceiling);
  set("solver.omega_floor", solver.omega_floor);
  set("solver.omega_ceiling", solver.omega_ceiling);

  if (auto v = file.get_int("mc.ensemble")) mc.ensemble = *v;
  if (auto v = file.get_int("mc.seed")) mc.seed = static_cast<std::uint64_t>(*v);
  if (auto v = file.get_int("mc.n_modes")) mc.n_modes = static_cast<int>(*v);

  set("fluct.threshold", measure.threshold);
  if (auto m = file.get_string("fluct.measure")) {
    if (*m == "I") measure.kind = MeasureKind::I;
    else if (*m == "J") measure.kind = MeasureKind::J;
    else bad_value("fluct.measure", "I or J");
  }

  set("heating.current", heating_current);
  set("heating.upper_bound", heating_upper_bound);
  set("wire.length", wire.length);
  set("wire.radius", wire.radius);
  set("wire.resistivity", wire.resistivity);
  set("wire.mass_density", wire.mass_density);
  set("wire.atomic_mass", wire.atomic_mass);
  set("wire.heat_capacity", wire.heat_capacity);
  set("wire.debye_temperature", wire.debye_temperature);
  set("wire.reference_temperature", wire.reference_temperature);
  set("wire.nucleons_per_atom", wire.nucleons_per_atom);

  collapse.validate();
  scenario.validate();
  wire.validate();
  solver.validate();
  measure.validate();
  (void)cutoff();
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  const std::string t = trim(text);
  if (t.rfind("log:", 0) == 0 || t.rfind("lin:", 0) == 0) {
    std::vector<std::string> parts;
    std::istringstream is(t);
    std::string p;
    while (std::getline(is, p, ':')) parts.push_back(p);
    if (parts.size() != 4) throw Error(ErrorKind::InvalidArgument, "grid must look like log:lo:hi:n");
    const auto lo = to_double(parts[1]);
    const auto hi = to_double(parts[2]);
    const auto n = to_double(parts[3]);
    if (!lo || !hi || !n || *n < 1 || std::floor(*n) != *n) {
      throw Error(ErrorKind::InvalidArgument, "grid bounds and count must be numbers");
    }
    if (*n > 1e6) throw Error(ErrorKind::InvalidArgument, "grids hold at most 1e6 points");
    const bool log_spaced = parts[0] == "log";
    if (log_spaced && !(*lo > 0.0 && *hi > 0.0)) throw Error(ErrorKind::InvalidArgument, "log grid needs positive bounds");
    const auto count = static_cast<std::size_t>(*n);
    for (std::size_t i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      grid.push_back(log_spaced ? std::exp(std::log(*lo) + f * (std::log(*hi) - std::log(*lo)))
                                : *lo + f * (*hi - *lo));
    }
    // Pin the end points against exp/log round-off.
    grid.front() = *lo;
    grid.back() = *hi;
  } else {
    std::istringstream is(t);
    std::string item;
    while (std::getline(is, item, ',')) {
      const auto v = to_double(item);
      if (!v) throw Error(ErrorKind::InvalidArgument, "bad grid entry '" + item + "'");
      grid.push_back(*v);
    }
  }
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "grid is empty");
  if (grid.size() > 1'000'000) throw Error(ErrorKind::InvalidArgument, "grids hold at most 1e6 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) throw Error(ErrorKind::InvalidArgument, "grid values must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw Error(ErrorKind::InvalidArgument, "grid must be strictly increasing");
  }
  return grid;
}

}  // namespace cslb
