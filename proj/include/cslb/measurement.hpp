#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cslb {

struct IonSpecies {
  std::string name;
  double nucleons = 0.0;
  /// Drift velocity [m/s]; the battery's common drift velocity when unset.
  std::optional<double> velocity;
};

/// Li-ion battery transport: ions drift with velocity v across an
/// electrolyte of thickness h.
struct BatteryModel {
  double v_drift = 2.8e-7;        // m/s
  double h_electrolyte = 1e-4;    // m
  std::vector<IonSpecies> species{{"Li+", 7.0, std::nullopt}, {"PF6-", 145.0, std::nullopt}};

  double velocity_of(const IonSpecies& s) const { return s.velocity.value_or(v_drift); }

  /// PF6- drifting at v/20, the momentum-conservation estimate.
  BatteryModel with_momentum_correction() const;

  /// Throws InvalidArgument unless every field is positive and a species exists.
  void validate() const;
};

enum class MeasurementTimeMode { Record, StageSum, Detection };

struct MeasurementScenario {
  std::string label = "custom";
  double i_electric = 2e-3;   // A
  double t_detect = 1e-8;     // s
  double t_amplify = 1e-8;    // s
  double t_record = 1e-4;     // s
  double t_pulse = 1e-9;      // s
  BatteryModel battery;
  MeasurementTimeMode time_mode = MeasurementTimeMode::Record;

  /// Time by which a permanent record exists, per time_mode.
  double measurement_time() const;

  /// Ion flux I/e [1/s].
  double particle_current() const;

  void validate() const;
};

}  // namespace cslb
