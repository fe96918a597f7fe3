#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cslb/collapse.hpp"
#include "cslb/error.hpp"
#include "cslb/scenarios.hpp"

using namespace cslb;

TEST_CASE("presets") {
  const auto all = scenario_presets();
  REQUIRE(all.size() == 3);
  const auto detect = find_preset("detection-2mA");
  const auto nand = find_preset("nand-13.8mA");
  const auto flash = find_preset("flash-500mA");
  REQUIRE(detect);
  REQUIRE(nand);
  REQUIRE(flash);
  CHECK(detect->i_electric == 2e-3);
  CHECK(nand->i_electric == 13.8e-3);
  CHECK(flash->i_electric == 0.5);
  CHECK(nand->measurement_time() == doctest::Approx(1e-5));
  CHECK(flash->measurement_time() == doctest::Approx(1e-4));
  CHECK_FALSE(find_preset("nope").has_value());
}

TEST_CASE("measurement time modes") {
  MeasurementScenario s;
  s.time_mode = MeasurementTimeMode::Record;
  CHECK(s.measurement_time() == s.t_record);
  s.time_mode = MeasurementTimeMode::StageSum;
  CHECK(s.measurement_time() == doctest::Approx(s.t_detect + s.t_amplify + s.t_record));
  s.time_mode = MeasurementTimeMode::Detection;
  CHECK(s.measurement_time() == s.t_detect);
  s.t_pulse = 2.0 * s.t_detect;
  CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("momentum correction slows the heavy ion only") {
  const BatteryModel b;
  const auto c = b.with_momentum_correction();
  CHECK(c.velocity_of(c.species[0]) == b.v_drift);
  CHECK(c.velocity_of(c.species[1]) == doctest::Approx(b.v_drift / 20.0));
}

TEST_CASE("heating chain intermediate values") {
  const WireModel w;
  CHECK(wire_volume(w) == doctest::Approx(std::numbers::pi * 1e-6 * 1e-2));
  CHECK(wire_resistance(w) == doctest::Approx(1.68e-8 * 1e-2 / (std::numbers::pi * 1e-6)));
  CHECK(wire_mass(w) == doctest::Approx(8.92e3 * wire_volume(w)));
  CHECK(atom_count(w) == doctest::Approx(wire_mass(w) / 1.05e-25));
  CHECK(dissipated_power(w, 0.5) == doctest::Approx(0.25 * wire_resistance(w)));
  CHECK(temperature_rise(w, 0.5, 1e-4) ==
        doctest::Approx(dissipated_power(w, 0.5) * 1e-4 / (wire_mass(w) * 385.0)));
  CHECK(debye_frequency(w) == doctest::Approx(1.380649e-23 * 343.0 / 1.054571817e-34));
  const double xr = std::sqrt(18.0 * 1.054571817e-34 / (1.05e-25 * debye_frequency(w)) * 298.0 / 343.0);
  CHECK(thermal_displacement_scale(w) == doctest::Approx(xr));
  CHECK(phonon_displacement(w, 2.0) == doctest::Approx(xr * 2.0 / (2.0 * 298.0)));
}

TEST_CASE("heating rate is negligible") {
  const CollapseParams p;
  const WireModel w;
  const auto white = CutoffSpec::white();
  const auto r = heating_chain(p, white, w, 0.5, 1e-4, 1e-4);
  CHECK(r.gamma == doctest::Approx(gamma_heating(p, white, w, 0.5, 1e-4)));
  CHECK(r.gamma < 1e-16);
  const auto pub = heating_chain_published(p, white, w, 0.5);
  CHECK(pub.heating_time == kPublishedHeatingTime);
  CHECK(pub.collapse_time == kPublishedHeatingLambdaTime);
  CHECK(pub.gamma == doctest::Approx(r.gamma * 1e-4));
}

TEST_CASE("published heating pairing stays negligible across one-at-a-time variations") {
  const CollapseParams p;
  const auto white = CutoffSpec::white();
  for (double f : {0.5, 1.5}) {
    for (int field = 0; field < 7; ++field) {
      WireModel w;
      double current = 0.5;
      switch (field) {
        case 0: w.length *= f; break;
        case 1: w.radius *= f; break;
        case 2: w.resistivity *= f; break;
        case 3: w.heat_capacity *= f; break;
        case 4: w.debye_temperature *= f; break;
        case 5: w.atomic_mass *= f; break;
        case 6: current *= f; break;
      }
      CAPTURE(field);
      CAPTURE(f);
      CHECK(heating_chain_published(p, white, w, current).gamma <= 1e-16);
    }
  }
}

TEST_CASE("wire validation") {
  WireModel w;
  w.radius = -1.0;
  CHECK_THROWS_AS(w.validate(), Error);
}
