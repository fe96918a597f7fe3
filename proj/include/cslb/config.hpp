#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cslb/bounds.hpp"
#include "cslb/collapse.hpp"
#include "cslb/fluctuations.hpp"
#include "cslb/measurement.hpp"
#include "cslb/scenarios.hpp"
#include "cslb/spectral.hpp"

namespace cslb {

/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnvVar = "CSLB_CONFIG";

/// Flat view of a TOML-style file: "section.key" -> raw value text.
///
/// Supports [section] headers, key = value lines, # comments, quoted
/// strings, numbers, booleans and [a, b, c] number lists.
class ConfigFile {
 public:
  static ConfigFile parse(std::istream& in, const std::string& origin = "<config>");
  static ConfigFile load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<std::int64_t> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<double>> get_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::string origin_;
  std::map<std::string, std::string> values_;
};

struct McSettings {
  std::int64_t ensemble = 10000;
  std::uint64_t seed = 20190101;
  int n_modes = 512;
};

/// Everything a command needs. Defaults are the published parameter choices.
struct RunConfig {
  CollapseParams collapse;
  CutoffKind cutoff_kind = CutoffKind::White;
  double omega_m = 1e4;
  MeasurementScenario scenario = *find_preset("detection-2mA");
  WireModel wire;
  double heating_current = 0.5;
  SolverConfig solver;
  FluctuationMeasure measure;
  McSettings mc;
  /// Fixed bulk-heating upper bound on omega_m, emitted as annotation only.
  double heating_upper_bound = 4e10;

  CutoffSpec cutoff() const;
  /// Applies every recognised key of `file`; unknown keys are an error.
  void apply(const ConfigFile& file);
};

/// Grid syntax: "log:lo:hi:n", "lin:lo:hi:n" or a comma-separated list.
/// Grids must be positive, strictly increasing and hold at most 1e6 points.
std::vector<double> parse_grid(const std::string& text);

}  // namespace cslb
