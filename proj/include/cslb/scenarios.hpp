#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cslb/collapse.hpp"
#include "cslb/measurement.hpp"
#include "cslb/spectral.hpp"

namespace cslb {

/// Named measurement setups: "detection-2mA", "nand-13.8mA", "flash-500mA".
std::vector<MeasurementScenario> scenario_presets();
std::optional<MeasurementScenario> find_preset(std::string_view name);

/// Copper wire standing in for the electronic links of the setup.
struct WireModel {
  double length = 1e-2;                 // m
  double radius = 1e-3;                 // m
  double resistivity = 1.68e-8;         // Ohm m
  double mass_density = 8.92e3;         // kg/m^3
  double atomic_mass = 1.05e-25;        // kg
  double heat_capacity = 385.0;         // J/(kg K)
  double debye_temperature = 343.0;     // K
  double reference_temperature = 298.0; // K
  double nucleons_per_atom = 63.5;

  void validate() const;
};

double wire_volume(const WireModel& w);
double wire_resistance(const WireModel& w);
double wire_mass(const WireModel& w);
double atom_count(const WireModel& w);
double dissipated_power(const WireModel& w, double i_electric);
/// Temperature increase after dissipating I^2 R for a time t into the whole wire.
double temperature_rise(const WireModel& w, double i_electric, double t);
/// omega_D = k_B T_D / hbar.
double debye_frequency(const WireModel& w);
/// Typical thermal atomic displacement x_r = sqrt(18 hbar / (m omega_D) * T_r / T_D).
double thermal_displacement_scale(const WireModel& w);
/// Rigid phonon displacement x_r dT / (2 T_r).
double phonon_displacement(const WireModel& w, double delta_t);

/// Every intermediate of the wire-heating estimate.
struct HeatingReport {
  double volume = 0.0;
  double atoms = 0.0;
  double resistance = 0.0;
  double power = 0.0;
  double delta_t = 0.0;
  double x_r = 0.0;
  double displacement = 0.0;
  double heating_time = 0.0;    // time over which the wire heats
  double collapse_time = 0.0;   // time at which Lambda is evaluated
  double gamma = 0.0;
};

/// Heats the wire for `heating_time`, then evaluates the point-form Gamma
/// of all copper atoms with Lambda taken at `collapse_time`.
HeatingReport heating_chain(const CollapseParams& params, const CutoffSpec& spec, const WireModel& w,
                            double i_electric, double heating_time, double collapse_time);

/// Consistent-time heating Gamma: the wire heats for t and Lambda is taken at t.
double gamma_heating(const CollapseParams& params, const CutoffSpec& spec, const WireModel& w,
                     double i_electric, double t);

/// The published heating value pairs a 1e-4 s temperature rise with Lambda
/// at 1e-8 s; this reproduces that pairing.
inline constexpr double kPublishedHeatingTime = 1e-4;
inline constexpr double kPublishedHeatingLambdaTime = 1e-8;
HeatingReport heating_chain_published(const CollapseParams& params, const CutoffSpec& spec, const WireModel& w,
                                      double i_electric);

}  // namespace cslb
