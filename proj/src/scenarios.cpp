#include "cslb/scenarios.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "cslb/constants.hpp"
#include "cslb/error.hpp"

namespace cslb {

namespace {

struct PresetRow {
  const char* label;
  double current;
  double t_record;
  MeasurementTimeMode mode;
};

// Detector output (100 mV into 50 Ohm), a single fast NAND, and a USB flash drive.
constexpr std::array<PresetRow, 3> kPresets{{
    {"detection-2mA", 2e-3, 1e-4, MeasurementTimeMode::Detection},
    {"nand-13.8mA", 13.8e-3, 1e-5, MeasurementTimeMode::Record},
    {"flash-500mA", 0.5, 1e-4, MeasurementTimeMode::Record},
}};

}  // namespace

std::vector<MeasurementScenario> scenario_presets() {
  std::vector<MeasurementScenario> out;
  for (const auto& row : kPresets) {
    MeasurementScenario s;
    s.label = row.label;
    s.i_electric = row.current;
    s.t_record = row.t_record;
    s.time_mode = row.mode;
    out.push_back(s);
  }
  return out;
}

std::optional<MeasurementScenario> find_preset(std::string_view name) {
  for (auto& s : scenario_presets()) {
    if (s.label == name) return s;
  }
  return std::nullopt;
}

void WireModel::validate() const {
  for (double v : {length, radius, resistivity, mass_density, atomic_mass, heat_capacity, debye_temperature,
                   reference_temperature, nucleons_per_atom}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, "wire parameters must all be positive");
    }
  }
}

double wire_volume(const WireModel& w) {
  w.validate();
  return std::numbers::pi * w.radius * w.radius * w.length;
}

double wire_resistance(const WireModel& w) {
  w.validate();
  return w.length * w.resistivity / (std::numbers::pi * w.radius * w.radius);
}

double wire_mass(const WireModel& w) { return w.mass_density * wire_volume(w); }

double atom_count(const WireModel& w) { return wire_mass(w) / w.atomic_mass; }

double dissipated_power(const WireModel& w, double i_electric) {
  if (!(i_electric >= 0.0)) throw Error(ErrorKind::InvalidArgument, "current must be >= 0");
  return i_electric * i_electric * wire_resistance(w);
}

double temperature_rise(const WireModel& w, double i_electric, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "time must be >= 0");
  return dissipated_power(w, i_electric) * t / (wire_mass(w) * w.heat_capacity);
}

double debye_frequency(const WireModel& w) {
  w.validate();
  return constants::boltzmann * w.debye_temperature / constants::hbar;
}

double thermal_displacement_scale(const WireModel& w) {
  const double omega_d = debye_frequency(w);
  return std::sqrt(18.0 * constants::hbar / (w.atomic_mass * omega_d) * w.reference_temperature /
                   w.debye_temperature);
}

double phonon_displacement(const WireModel& w, double delta_t) {
  if (!(delta_t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "temperature rise must be >= 0");
  return thermal_displacement_scale(w) * delta_t / (2.0 * w.reference_temperature);
}

HeatingReport heating_chain(const CollapseParams& params, const CutoffSpec& spec, const WireModel& w,
                            double i_electric, double heating_time, double collapse_time) {
  HeatingReport r;
  r.volume = wire_volume(w);
  r.atoms = atom_count(w);
  r.resistance = wire_resistance(w);
  r.power = dissipated_power(w, i_electric);
  r.delta_t = temperature_rise(w, i_electric, heating_time);
  r.x_r = thermal_displacement_scale(w);
  r.displacement = phonon_displacement(w, r.delta_t);
  r.heating_time = heating_time;
  r.collapse_time = collapse_time;
  const DisplacedSpecies copper{"Cu", w.nucleons_per_atom, r.atoms, r.displacement};
  r.gamma = gamma_point(params, spec, std::span(&copper, 1), collapse_time);
  return r;
}

double gamma_heating(const CollapseParams& params, const CutoffSpec& spec, const WireModel& w,
                     double i_electric, double t) {
  return heating_chain(params, spec, w, i_electric, t, t).gamma;
}

HeatingReport heating_chain_published(const CollapseParams& params, const CutoffSpec& spec, const WireModel& w,
                                      double i_electric) {
  return heating_chain(params, spec, w, i_electric, kPublishedHeatingTime, kPublishedHeatingLambdaTime);
}

}  // namespace cslb
