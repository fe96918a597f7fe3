#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cslb/bounds.hpp"
#include "cslb/cli.hpp"
#include "cslb/collapse.hpp"
#include "cslb/error.hpp"
#include "cslb/fluctuations.hpp"
#include "cslb/noise_mc.hpp"
#include "cslb/scenarios.hpp"

namespace py = pybind11;
using namespace cslb;

PYBIND11_MODULE(_cslb, m) {
  m.doc() = "Colored-noise collapse rates and cutoff bounds";

  static py::exception<Error> error_type(m, "CslbError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type.ptr(), e.what());
    }
  });

  py::enum_<CutoffKind>(m, "CutoffKind")
      .value("WHITE", CutoffKind::White)
      .value("HEAVISIDE", CutoffKind::Heaviside)
      .value("GAUSSIAN_EXP", CutoffKind::GaussianExp)
      .value("EXPONENTIAL", CutoffKind::Exponential)
      .value("LORENTZIAN", CutoffKind::Lorentzian);

  py::enum_<MeasureKind>(m, "MeasureKind").value("I", MeasureKind::I).value("J", MeasureKind::J);

  py::class_<CutoffSpec>(m, "CutoffSpec")
      .def(py::init<CutoffKind, double>(), py::arg("kind"), py::arg("omega_m"))
      .def_static("white", &CutoffSpec::white)
      .def_static("lorentzian", &CutoffSpec::lorentzian, py::arg("omega_m"))
      .def_static("heaviside", &CutoffSpec::heaviside, py::arg("omega_m"))
      .def_static("gaussian_exp", &CutoffSpec::gaussian_exp, py::arg("omega_m"))
      .def_static("exponential", &CutoffSpec::exponential, py::arg("omega_m"))
      .def_static("parse",
                  [](const std::string& kind, double omega_m) {
                    const auto k = parse_cutoff_kind(kind);
                    if (!k) throw Error(ErrorKind::InvalidArgument, "unknown cutoff kind '" + kind + "'");
                    return *k == CutoffKind::White ? CutoffSpec::white() : CutoffSpec(*k, omega_m);
                  },
                  py::arg("kind"), py::arg("omega_m") = 0.0)
      .def_property_readonly("kind", &CutoffSpec::kind)
      .def_property_readonly("omega_m", &CutoffSpec::omega_m)
      .def("__repr__", &CutoffSpec::describe);

  py::class_<CollapseParams>(m, "CollapseParams")
      .def(py::init([](double lambda, double r_c) {
             CollapseParams p;
             p.lambda = lambda;
             p.r_c = r_c;
             p.validate();
             return p;
           }),
           py::arg("lambda_") = 1e-8, py::arg("r_c") = 1e-7)
      .def_readwrite("lambda_", &CollapseParams::lambda)
      .def_readwrite("r_c", &CollapseParams::r_c)
      .def_readwrite("m0", &CollapseParams::m0);

  py::class_<MeasurementScenario>(m, "MeasurementScenario")
      .def(py::init<>())
      .def_static("preset",
                  [](const std::string& name) {
                    const auto p = find_preset(name);
                    if (!p) throw Error(ErrorKind::InvalidArgument, "unknown preset '" + name + "'");
                    return *p;
                  },
                  py::arg("name"))
      .def_readwrite("label", &MeasurementScenario::label)
      .def_readwrite("i_electric", &MeasurementScenario::i_electric)
      .def_readwrite("t_record", &MeasurementScenario::t_record)
      .def_property_readonly("measurement_time", &MeasurementScenario::measurement_time)
      .def("with_momentum_correction", [](MeasurementScenario s) {
        s.battery = s.battery.with_momentum_correction();
        return s;
      });
  m.def("presets", [] {
    std::vector<std::string> names;
    for (const auto& s : scenario_presets()) names.push_back(s.label);
    return names;
  });

  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("value", &BoundResult::value)
      .def_readonly("lo", &BoundResult::lo)
      .def_readonly("hi", &BoundResult::hi)
      .def_readonly("iterations", &BoundResult::iterations)
      .def_readonly("residual", &BoundResult::residual);

  py::class_<HeatingReport>(m, "HeatingReport")
      .def_readonly("volume", &HeatingReport::volume)
      .def_readonly("atoms", &HeatingReport::atoms)
      .def_readonly("resistance", &HeatingReport::resistance)
      .def_readonly("power", &HeatingReport::power)
      .def_readonly("delta_t", &HeatingReport::delta_t)
      .def_readonly("x_r", &HeatingReport::x_r)
      .def_readonly("displacement", &HeatingReport::displacement)
      .def_readonly("heating_time", &HeatingReport::heating_time)
      .def_readonly("collapse_time", &HeatingReport::collapse_time)
      .def_readonly("gamma", &HeatingReport::gamma);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("mean", &McEstimate::mean)
      .def_readonly("std_error", &McEstimate::std_error)
      .def_readonly("samples", &McEstimate::samples)
      .def("z_score", &McEstimate::z_score);

  m.def("lambda_big", [](const CutoffSpec& s, double t) { return lambda_big(s, t); }, py::arg("spec"), py::arg("t"));
  m.def("lambda_big_quadrature", py::overload_cast<const CutoffSpec&, double, double>(&lambda_big_quadrature),
        py::arg("spec"), py::arg("t"), py::arg("rel_tol") = 1e-12);
  m.def("gamma_of_omega", &gamma_of_omega, py::arg("spec"), py::arg("omega"));
  m.def("delta_gamma", &delta_gamma, py::arg("spec"), py::arg("tau"));

  m.def("ions_displaced", &ions_displaced, py::arg("i_electric"), py::arg("h") = 1e-4, py::arg("v") = 2.8e-7);
  m.def("gamma_current", &gamma_current, py::arg("params"), py::arg("spec"), py::arg("scenario"), py::arg("t"));
  m.def("sphere_form_factor", &sphere_form_factor, py::arg("radius"), py::arg("r_c"));

  m.def("collapse_time",
        [](const CollapseParams& p, const CutoffSpec& s, const MeasurementScenario& sc) {
          return scenario_collapse_time(p, s, sc);
        },
        py::arg("params"), py::arg("spec"), py::arg("scenario"));
  m.def("white_collapse_time_analytic", &white_collapse_time_analytic, py::arg("params"), py::arg("scenario"));
  m.def("cutoff_lower_bound",
        [](const CollapseParams& p, const MeasurementScenario& sc, double t_m) { return cutoff_lower_bound(p, sc, t_m); },
        py::arg("params"), py::arg("scenario"), py::arg("t_m"));
  m.def("small_omega_cutoff_law", &small_omega_cutoff_law, py::arg("params"), py::arg("scenario"), py::arg("t_m"));
  m.def("fluctuation_bound",
        [](MeasureKind k, double threshold, double t_m, CutoffKind kind) {
          return fluctuation_bound({k, threshold}, t_m, kind);
        },
        py::arg("measure"), py::arg("threshold"), py::arg("t_m"), py::arg("kind") = CutoffKind::Lorentzian);
  m.def("lambda_rescale", &lambda_rescale, py::arg("t_c_white"), py::arg("t_m"));

  m.def("i_norm", &i_norm, py::arg("spec"), py::arg("t"));
  m.def("j_norm", &j_norm, py::arg("spec"), py::arg("t"));

  m.def("heating_chain",
        [](double i_electric, double heating_time, double collapse_time) {
          return heating_chain(CollapseParams{}, CutoffSpec::white(), WireModel{}, i_electric, heating_time,
                               collapse_time);
        },
        py::arg("i_electric") = 0.5, py::arg("heating_time") = kPublishedHeatingTime,
        py::arg("collapse_time") = kPublishedHeatingTime);

  m.def("estimate_lambda",
        [](const CutoffSpec& s, double t, std::int64_t n, std::uint64_t seed) { return estimate_lambda(s, t, n, seed); },
        py::arg("spec"), py::arg("t"), py::arg("ensemble_size"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("sample_lorentzian",
        [](double omega_m, double dt, std::int64_t steps, std::uint64_t seed) {
          return sample_lorentzian(omega_m, dt, steps, seed).values;
        },
        py::arg("omega_m"), py::arg("dt"), py::arg("steps"), py::arg("seed"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one cslb command; returns (exit_code, stdout, stderr).");
}
