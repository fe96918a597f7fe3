// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cslb/bounds.hpp"
#include "cslb/cli.hpp"
#include "cslb/collapse.hpp"
#include "cslb/error.hpp"
#include "cslb/noise_mc.hpp"
#include "cslb/scenarios.hpp"
#include "property_suite.hpp"

using namespace cslb;
using cli::sci;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

double rel(double a, double b) { return std::abs(a / b - 1.0); }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return g;
}

MeasurementScenario preset(const char* name) { return *find_preset(name); }

double ions(const MeasurementScenario& s) {
  return ions_displaced(s.i_electric, s.battery.h_electrolyte, s.battery.v_drift);
}

void ion_counts(Verdict& v) {
  const std::array<std::pair<const char*, double>, 3> cases{
      {{"detection-2mA", 4.46e18}, {"nand-13.8mA", 3.08e19}, {"flash-500mA", 1.11e21}}};
  for (const auto& [name, published] : cases) {
    const double n = ions(preset(name));
    v.detail << ' ' << name << " N=" << sci(n);
    v.check(rel(n, published) <= 0.01, std::string(name) + " beyond 1%");
  }
}

void white_collapse_times(Verdict& v) {
  const CollapseParams p;
  const std::array<std::pair<const char*, double>, 3> cases{
      {{"detection-2mA", 8.16e-6}, {"flash-500mA", 1.30e-6}, {"nand-13.8mA", 4.29e-6}}};
  for (const auto& [name, published] : cases) {
    const auto s = preset(name);
    const double t = scenario_collapse_time(p, CutoffSpec::white(), s).value;
    const double analytic = white_collapse_time_analytic(p, s);
    v.detail << ' ' << name << " t_C=" << sci(t) << " (cube root rel " << sci(rel(t, analytic)) << ")";
    v.check(rel(t, published) <= 0.01, std::string(name) + " beyond 1%");
    v.check(rel(t, analytic) <= 1e-8, std::string(name) + " disagrees with cube root");
  }
}

void cutoff_bounds(Verdict& v) {
  const CollapseParams p;
  struct Case {
    const char* name;
    double t_m;
    double published;
  };
  const std::array<Case, 4> cases{{{"nand-13.8mA", 1e-4, 1.0},
                                   {"flash-500mA", 1e-4, 5e-2},
                                   {"nand-13.8mA", 1e-5, 1e4},
                                   {"flash-500mA", 1e-5, 5e2}}};
  for (const auto& c : cases) {
    const auto s = preset(c.name);
    const double w = cutoff_lower_bound(p, s, c.t_m).value;
    const double law = small_omega_cutoff_law(p, s, c.t_m);
    const double ratio = w / c.published;
    v.detail << ' ' << c.name << "@" << sci(c.t_m) << " omega*=" << sci(w) << " (law rel " << sci(rel(w, law))
             << ")";
    v.check(ratio <= 2.0 && ratio >= 0.5, std::string(c.name) + " beyond factor 2");
    v.check(rel(w, law) <= 5e-3, std::string(c.name) + " at t_M=" + sci(c.t_m) + " beyond 0.5% of small-omega law");
  }
}

void fluctuation_bounds(Verdict& v) {
  const FluctuationMeasure i{MeasureKind::I, 0.1};
  const FluctuationMeasure j{MeasureKind::J, 0.1};
  const double w4 = fluctuation_bound(i, 1e-4, CutoffKind::Lorentzian).value;
  const double w5 = fluctuation_bound(i, 1e-5, CutoffKind::Lorentzian).value;
  const double xj = fluctuation_bound(j, 1e-4, CutoffKind::Lorentzian).value * 1e-4;
  // 0.1 x^2 - 2 x + 2 = 0, the large-x form of the Lorentzian J crossing
  const double xj_oracle = (2.0 + std::sqrt(4.0 - 0.8)) / 0.2;
  v.detail << " I: omega_M t_M=" << sci(w4 * 1e-4) << ", omega_M(1e-4)=" << sci(w4) << ", omega_M(1e-5)=" << sci(w5)
           << "; J: omega_M t_M=" << sci(xj) << " (oracle " << sci(xj_oracle) << ")";
  v.check(rel(w4, 1e5) <= 0.05, "I bound at 1e-4");
  v.check(rel(w5, 1e6) <= 0.05, "I bound at 1e-5");
  v.check(std::abs(xj - 18.94) <= 0.01, "J crossing not 18.94 +- 0.01");
  v.check(std::abs(xj - xj_oracle) <= 0.01, "J crossing vs quadratic root");
}

void lambda_rescaling(Verdict& v) {
  const CollapseParams p;
  const double tc_flash = scenario_collapse_time(p, CutoffSpec::white(), preset("flash-500mA")).value;
  const double tc_nand = scenario_collapse_time(p, CutoffSpec::white(), preset("nand-13.8mA")).value;
  const double a = lambda_rescale(tc_flash, 1e-5);
  const double b = lambda_rescale(tc_nand, 1e-5);
  const double c = lambda_rescale(tc_flash, 1e-4);
  const double d = lambda_rescale(tc_nand, 1e-4);
  v.detail << ' ' << sci(a) << ", " << sci(b) << ", " << sci(c) << "; fourth value " << sci(d)
           << " vs printed 7.9e-06 (ANNOTATED: formula gives 7.9e-05)";
  v.check(rel(a, 2.2e-3) <= 0.03, "2.2e-3");
  v.check(rel(b, 7.9e-2) <= 0.03, "7.9e-2");
  v.check(rel(c, 2.2e-6) <= 0.03, "2.2e-6");
  v.check(rel(d, 7.9e-5) <= 0.03, "formula value 7.9e-5");
  v.check(rel(d, 7.9e-6) > 0.03, "printed 7.9e-6 discrepancy not detected");
}

void heating(Verdict& v) {
  const CollapseParams p;
  const WireModel w;
  const auto white = CutoffSpec::white();
  const auto r = heating_chain(p, white, w, 0.5, kPublishedHeatingTime, kPublishedHeatingTime);
  const auto pub = heating_chain_published(p, white, w, 0.5);
  const std::array<std::tuple<const char*, double, double, double>, 7> rows{{
      {"V", r.volume, 3.14e-8, 0.01},
      {"N_Cu", r.atoms, 2.67e21, 0.01},
      {"R", r.resistance, 5.35e-5, 0.01},
      {"P", r.power, 1.34e-5, 0.01},
      {"dT", r.delta_t, 1.24e-8, 0.01},
      {"x_r", r.x_r, 2e-11, 0.15},
      {"Delta", r.displacement, 4e-22, 0.20},
  }};
  for (const auto& [name, value, published, tol] : rows) {
    v.detail << ' ' << name << '=' << sci(value);
    v.check(rel(value, published) <= tol, name);
  }
  v.detail << " Gamma(consistent)=" << sci(r.gamma) << " Gamma(published pairing)=" << sci(pub.gamma);
  v.check(r.gamma <= 1e-16, "consistent-time Gamma above 1e-16");
  v.check(rel(pub.gamma, 4.3e-21) <= 0.10, "published-pairing Gamma beyond 10% of 4.3e-21");
}

void closed_form_vs_quadrature(Verdict& v) {
  const std::array kinds{CutoffKind::White, CutoffKind::Heaviside, CutoffKind::GaussianExp, CutoffKind::Exponential,
                         CutoffKind::Lorentzian};
  const auto ts = log_grid(1e-10, 1e-3, 40);
  double worst = 0.0;
  int cells = 0;
  for (auto k : kinds) {
    for (int e = 2; e <= 8; ++e) {
      const double wm = std::pow(10.0, e);
      const auto spec = k == CutoffKind::White ? CutoffSpec::white() : CutoffSpec(k, wm);
      for (double t : ts) {
        worst = std::max(worst, rel(lambda_big(spec, t), lambda_big_quadrature(spec, t)));
        ++cells;
      }
    }
  }
  v.detail << ' ' << cells << " cells, max rel error " << sci(worst);
  v.check(worst <= 1e-8, "max relative error above 1e-8");
}

void monte_carlo(Verdict& v) {
  const auto res = run_oracle_suite(10000, 20190101);
  for (const auto& c : res.sampler_checks) {
    v.check(c.pass, "sampler " + c.name);
  }
  std::ostringstream zs;
  double worst_z = 0.0;
  for (const auto& c : res.sampler_checks) worst_z = std::max(worst_z, std::abs(c.z));
  v.detail << " sampler checks " << res.sampler_checks.size() << " (max |z| " << worst_z << "), closure "
           << res.closure_passes() << "/" << res.closure_cells.size() << " within 3 SE";
  v.check(res.closure_passes() >= 9, "fewer than 9/10 closure cells");
}

void properties(Verdict& v) {
  const auto outcomes = props::run_property_suite();
  int passed = 0;
  for (const auto& o : outcomes) {
    std::printf("    %s property: %s (%s)\n", o.pass ? "ok  " : "FAIL", o.name.c_str(), o.detail.c_str());
    if (o.pass) ++passed;
    v.check(o.pass, o.name);
  }
  v.detail << ' ' << passed << '/' << outcomes.size() << " properties hold";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"ion counts", ion_counts},
      {"white-noise collapse times", white_collapse_times},
      {"Lorentzian cutoff lower bounds", cutoff_bounds},
      {"fluctuation bounds", fluctuation_bounds},
      {"lambda rescaling factors", lambda_rescaling},
      {"heating chain", heating},
      {"closed-form Lambda vs quadrature", closed_form_vs_quadrature},
      {"Monte-Carlo oracle suite", monte_carlo},
      {"property suite", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s criterion %zu (%s, %.1f s):%s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
