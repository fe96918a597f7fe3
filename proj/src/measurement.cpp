#include "cslb/measurement.hpp"

#include <cmath>

#include "cslb/constants.hpp"
#include "cslb/error.hpp"

namespace cslb {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be positive and finite");
  }
}

}  // namespace

BatteryModel BatteryModel::with_momentum_correction() const {
  BatteryModel out = *this;
  for (auto& s : out.species) {
    if (s.name == "PF6-") s.velocity = v_drift / 20.0;
  }
  return out;
}

void BatteryModel::validate() const {
  require_positive(v_drift, "battery drift velocity");
  require_positive(h_electrolyte, "electrolyte thickness");
  if (species.empty()) throw Error(ErrorKind::InvalidArgument, "battery needs at least one ion species");
  for (const auto& s : species) {
    require_positive(s.nucleons, "species nucleon count");
    if (s.velocity) require_positive(*s.velocity, "species velocity");
  }
}

double MeasurementScenario::measurement_time() const {
  switch (time_mode) {
    case MeasurementTimeMode::Record: return t_record;
    case MeasurementTimeMode::StageSum: return t_detect + t_amplify + t_record;
    case MeasurementTimeMode::Detection: return t_detect;
  }
  return t_record;
}

double MeasurementScenario::particle_current() const {
  return i_electric / constants::elementary_charge;
}

void MeasurementScenario::validate() const {
  require_positive(i_electric, "current");
  require_positive(t_detect, "detection time");
  require_positive(t_amplify, "amplification time");
  require_positive(t_record, "recording time");
  require_positive(t_pulse, "pulse width");
  if (t_pulse > t_detect) throw Error(ErrorKind::InvalidArgument, "pulse width exceeds detection time");
  battery.validate();
}

}  // namespace cslb
