#include <doctest.h>

#include <cmath>
#include <vector>

#include "cslb/collapse.hpp"
#include "cslb/error.hpp"
#include "cslb/scenarios.hpp"
#include "oracles.hpp"

using namespace cslb;

TEST_CASE("point-particle rate") {
  const CollapseParams p;
  const std::vector<DisplacedSpecies> species{{"a", 7.0, 10.0, 1e-9}, {"b", 145.0, 3.0, 2e-9}};
  const auto spec = CutoffSpec::white();
  const double t = 1e-3;
  const double expected = p.lambda * (0.5 * t) * (49.0 * 10.0 * 1e-18 + 145.0 * 145.0 * 3.0 * 4e-18) /
                          (2.0 * p.r_c * p.r_c);
  CHECK(gamma_point(p, spec, species, t) == doctest::Approx(expected).epsilon(1e-14));

  const std::vector<DisplacedSpecies> too_far{{"c", 1.0, 1.0, 1e-8}};
  CHECK_THROWS_WITH_AS(gamma_point(p, spec, too_far, t), doctest::Contains("DisplacementTooLarge"), Error);
  CollapseParams bad;
  bad.lambda = 0.0;
  CHECK_THROWS_AS(gamma_point(bad, spec, species, t), Error);
}

TEST_CASE("ion counts") {
  CHECK(ions_displaced(2e-3, 1e-4, 2.8e-7) == doctest::Approx(2e-3 / 1.602176634e-19 * 1e-4 / 2.8e-7));
  CHECK_THROWS_AS(ions_displaced(0.0, 1e-4, 2.8e-7), Error);
}

TEST_CASE("current rate reduces to the cubic law for white noise") {
  const CollapseParams p;
  const auto s = *find_preset("nand-13.8mA");
  const double k = white_cubic_coefficient(p, s);
  for (double t : {1e-8, 1e-6, 1e-4}) {
    CHECK(gamma_current(p, CutoffSpec::white(), s, t) == doctest::Approx(k * t * t * t).epsilon(1e-14));
  }
  CHECK(gamma_current(p, CutoffSpec::white(), s, 0.0) == 0.0);
}

TEST_CASE("colored current rate never exceeds the white one") {
  const CollapseParams p;
  const auto s = *find_preset("flash-500mA");
  for (auto kind : {CutoffKind::Heaviside, CutoffKind::GaussianExp, CutoffKind::Exponential, CutoffKind::Lorentzian}) {
    const CutoffSpec c(kind, 1e5);
    for (double t : {1e-7, 1e-5, 1e-3}) {
      CHECK(gamma_current(p, c, s, t) <= gamma_current(p, CutoffSpec::white(), s, t) * (1 + 1e-12));
    }
  }
}

TEST_CASE("sphere form factor against radial quadrature") {
  const double r_c = 1e-7;
  for (double rho : {1e-6, 1e-3, 0.05, 0.3, 0.99, 1.0, 1.01, 3.0, 10.0}) {
    CAPTURE(rho);
    CHECK(sphere_form_factor(rho * r_c, r_c) ==
          doctest::Approx(oracle::sphere_form_factor(rho * r_c, r_c)).epsilon(1e-10));
  }
}

TEST_CASE("sphere form factor against Monte Carlo") {
  const double r_c = 1e-7;
  for (double rho : {0.3, 1.0, 3.0}) {
    CAPTURE(rho);
    const auto est = sphere_form_factor_mc(rho * r_c, r_c, 400000, 77);
    CHECK(est.within_sigma(sphere_form_factor(rho * r_c, r_c), 4.0));
  }
}

TEST_CASE("small sphere reproduces the point-particle rate") {
  const CollapseParams p;
  const auto spec = CutoffSpec::lorentzian(1e6);
  const double n = 63.5;
  const double delta = 1e-12;
  const std::vector<DisplacedSpecies> one{{"atom", n, 1.0, delta}};
  CHECK(gamma_sphere(p, spec, n, 1.0, 1e-14, delta, 1e-5) ==
        doctest::Approx(gamma_point(p, spec, one, 1e-5)).epsilon(1e-9));
}

TEST_CASE("sphere form factor decreases with radius") {
  double prev = sphere_form_factor(1e-12, 1e-7);
  for (double r = 1e-10; r < 1e-5; r *= 1.5) {
    const double f = sphere_form_factor(r, 1e-7);
    CHECK(f <= prev);
    prev = f;
  }
}
