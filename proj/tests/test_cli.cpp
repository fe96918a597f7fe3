#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cslb/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cslb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cslb_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("number format") {
  CHECK(cslb::cli::sci(1.295086e-6) == "1.29508600e-06");
  CHECK(cslb::cli::sci(0.0) == "0.00000000e+00");
}

TEST_CASE("collapse-time for the 500 mA preset") {
  const auto r = run({"collapse-time", "--preset", "flash-500mA", "--cutoff", "white"});
  CHECK(r.code == 0);
  CHECK(r.out.find("t_C = 1.2950") != std::string::npos);
}

TEST_CASE("fluct-bound for I") {
  const auto r = run({"fluct-bound", "--measure", "I", "--t-m", "1e-4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("omega_m >= 9.9995") != std::string::npos);
}

TEST_CASE("lambda-curve CSV is deterministic") {
  const auto a = run({"lambda-curve", "--cutoff", "lorentzian", "--omega-m", "1e6,1e8,4e10", "--t-grid",
                      "log:1e-12:1e-3:50"});
  const auto b = run({"lambda-curve", "--cutoff", "lorentzian", "--omega-m", "1e6,1e8,4e10", "--t-grid",
                      "log:1e-12:1e-3:50"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("t,white,lorentzian:1.00000000e+06,lorentzian:1.00000000e+08,lorentzian:4.00000000e+10\n", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 51);
}

TEST_CASE("cutoff-bound writes metadata and a file") {
  const auto path = temp_path("bound.csv");
  const auto r = run({"cutoff-bound", "--omega-grid", "log:1e-2:1e10:7", "-o", path.string()});
  CHECK(r.code == 0);
  const auto text = slurp(path);
  CHECK(text.rfind("# heating_upper_bound_omega_m,4.00000000e+10\n", 0) == 0);
  CHECK(text.find("omega_m,t_c:nand-13.8mA,t_c:flash-500mA\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("config file and environment variable") {
  const auto path = temp_path("cfg.toml");
  {
    std::ofstream f(path);
    f << "[scenario]\npreset = \"nand-13.8mA\"\n";
  }
  const auto r = run({"collapse-time", "--config", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("nand-13.8mA") != std::string::npos);
  CHECK(r.out.find("t_C = 4.2854") != std::string::npos);

  ::setenv("CSLB_CONFIG", path.string().c_str(), 1);
  const auto e = run({"collapse-time"});
  ::unsetenv("CSLB_CONFIG");
  CHECK(e.out.find("nand-13.8mA") != std::string::npos);
  // flags override file values
  const auto o = run({"collapse-time", "--config", path.string(), "--preset", "flash-500mA"});
  CHECK(o.out.find("flash-500mA") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"collapse-time", "--cutoff", "pink"}).code == 1);
  CHECK(run({"collapse-time", "--config", "/nonexistent.toml"}).code == 1);
  CHECK(run({"lambda-curve", "--t-grid", "3,2"}).code == 1);
  const auto solver = run({"cutoff-bound", "--preset", "flash-500mA", "--t-m", "1e-7"});
  CHECK(solver.code == 2);
  CHECK(solver.err.find("NeverCollapsing") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("report annotates the two known discrepancies") {
  const auto r = run({"report"});
  CHECK(r.code == 0);
  std::size_t annotated = 0;
  for (std::size_t p = r.out.find("ANNOTATED"); p != std::string::npos; p = r.out.find("ANNOTATED", p + 1)) ++annotated;
  CHECK(annotated == 2);
  CHECK(r.out.find("deviations: 0") != std::string::npos);
}

TEST_CASE("heating and ions") {
  const auto h = run({"heating"});
  CHECK(h.code == 0);
  CHECK(h.out.find("copper atoms N   = 2.6688") != std::string::npos);
  const auto i = run({"ions"});
  CHECK(i.out.find("flash-500mA: I = 5.00000000e-01 A, N = 1.1145") != std::string::npos);
}
