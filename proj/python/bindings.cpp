#include "twinbeam/cli.hpp"
#include "twinbeam/conditional.hpp"
#include "twinbeam/error.hpp"
#include "twinbeam/oracles.hpp"
#include "twinbeam/phase_space.hpp"
#include "twinbeam/povm.hpp"
#include "twinbeam/teleport.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace twinbeam;

namespace {

// The numpy view of an operator is a copy of its matrix.
Matrix as_matrix(const FockOperator& op) { return op.matrix(); }

PovmElement pick_onoff(double eta, int dim, int outcome) {
  auto p = onoff_povm(eta, TruncationConfig(dim));
  if (outcome == 0) return p.no_click;
  if (outcome == 1) return p.click;
  throw PreconditionError("outcome must be 0 or 1");
}

}  // namespace

PYBIND11_MODULE(_twinbeam, m) {
  m.doc() = "Twin-beam conditional measurements, Wigner functions and teleportation.";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<RejectedOutcome>(m, "RejectedOutcome", PyExc_RuntimeError);

  py::class_<TwinBeamParams>(m, "TwinBeam")
      .def_static("from_photons", &TwinBeamParams::from_photons, py::arg("N"))
      .def_static("from_lambda", &TwinBeamParams::from_lambda, py::arg("lam"))
      .def_property_readonly("lam", &TwinBeamParams::lambda)
      .def_property_readonly("photons", &TwinBeamParams::photons)
      .def("default_dim", [](const TwinBeamParams& t, double eps) {
        return TruncationConfig::for_twin_beam(t, eps).dim;
      }, py::arg("eps") = kDefaultTailTolerance);

  py::class_<PovmElement>(m, "PovmElement")
      .def_property_readonly("matrix", [](const PovmElement& e) { return as_matrix(e.op); })
      .def_property_readonly("eta", [](const PovmElement& e) { return e.meta.eta; })
      .def("to_json", [](const PovmElement& e) { return to_json(e).dump(); });

  py::class_<ConditionalResult>(m, "ConditionalResult")
      .def_readonly("probability", &ConditionalResult::probability)
      .def_property_readonly("state", [](const ConditionalResult& r) { return as_matrix(r.state); })
      .def("to_json", [](const ConditionalResult& r) { return to_json(r).dump(); });

  m.def("onoff_povm", &pick_onoff, py::arg("eta"), py::arg("dim"), py::arg("outcome"));
  m.def("homodyne_povm", [](double x, double eta, int dim) {
    return eta == 1.0 ? homodyne_projector(x, TruncationConfig(dim)) : homodyne_povm(x, eta, TruncationConfig(dim));
  }, py::arg("x"), py::arg("eta"), py::arg("dim"));
  m.def("binned_homodyne_povm", [](double x, double eta, double delta, int dim) {
    return binned_homodyne_povm(x, eta, delta, TruncationConfig(dim));
  }, py::arg("x"), py::arg("eta"), py::arg("delta"), py::arg("dim"));
  m.def("heterodyne_povm", [](cplx alpha, const Matrix& reference, double eta, int dim) {
    return heterodyne_povm(alpha, FockOperator(reference), eta, TruncationConfig(dim));
  }, py::arg("alpha"), py::arg("reference"), py::arg("eta"), py::arg("dim"));

  m.def("conditional_state", [](const TwinBeamParams& t, const PovmElement& e) {
    return conditional_state(t, e);
  }, py::arg("twb"), py::arg("povm"));
  m.def("outcome_probability", [](const TwinBeamParams& t, const PovmElement& e) {
    return outcome_probability(t, e);
  }, py::arg("twb"), py::arg("povm"));

  m.def("coherent_state", [](cplx z, int dim) { return as_matrix(coherent_state(z, TruncationConfig(dim))); },
        py::arg("z"), py::arg("dim"));
  m.def("squeezed_state", [](cplx alpha, cplx zeta, int dim) {
    return as_matrix(squeezed_state(alpha, zeta, TruncationConfig(dim)));
  }, py::arg("alpha"), py::arg("zeta"), py::arg("dim"));
  m.def("state", [](const std::string& spec) { return as_matrix(cli::parse_state(spec)); }, py::arg("spec"));

  m.def("wigner", [](const Matrix& op, cplx alpha) { return wigner(FockOperator(op), alpha); },
        py::arg("op"), py::arg("alpha"));
  m.def("fidelity", [](const Matrix& a, const Matrix& pure) {
    return fidelity(FockOperator(a), FockOperator(pure));
  });
  m.def("trace_distance", [](const Matrix& a, const Matrix& b) {
    return trace_distance(FockOperator(a), FockOperator(b));
  });
  m.def("mean_photon_number", [](const Matrix& s) { return mean_photon_number(FockOperator(s)); });

  m.def("oracle", [](const std::string& name, const py::kwargs& kw) {
    json params = json::object();
    for (auto item : kw) params[py::cast<std::string>(item.first)] = py::cast<double>(item.second);
    return cli::evaluate_oracle(name, params).dump();
  }, py::arg("name"));
  m.def("oracle_names", &cli::oracle_names);

  m.def("effective_K", [](double n, double gamma_t, double thermal, double eta) {
    return effective_K(ChannelParams{n, gamma_t, thermal, eta});
  }, py::arg("N"), py::arg("gamma_t") = 0.0, py::arg("M") = 0.0, py::arg("eta") = 1.0);
  m.def("teleport_state", [](const Matrix& input, double k, int dim) {
    return as_matrix(teleport_state(FockOperator(input), k, TruncationConfig(dim)));
  }, py::arg("input"), py::arg("K"), py::arg("dim"));
  m.def("teleport_via_conditioning", [](const Matrix& input, double n, double gamma_t, double thermal,
                                        double eta, int dim) {
    py::gil_scoped_release release;
    return as_matrix(teleport_via_conditioning(FockOperator(input), ChannelParams{n, gamma_t, thermal, eta},
                                               TruncationConfig(dim)));
  }, py::arg("input"), py::arg("N"), py::arg("gamma_t") = 0.0, py::arg("M") = 0.0, py::arg("eta") = 1.0,
        py::arg("dim"));

  // Runs a CLI configuration; returns (exit code, stdout text, stderr text).
  m.def("run", [](const std::string& command, const std::map<std::string, double>& params,
                  const std::map<std::string, std::string>& options, const std::string& output,
                  const std::string& format) {
    auto cmd = cli::parse_command(command);
    if (!cmd) throw PreconditionError("unknown command '" + command + "'");
    cli::RunConfig cfg{*cmd, params, options, output, std::nullopt};
    if (format == "json") cfg.format = cli::Format::Json;
    else if (format == "csv") cfg.format = cli::Format::Csv;
    else if (!format.empty()) throw PreconditionError("format must be json or csv");
    std::ostringstream out, err;
    int code = cli::run(cfg, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("command"), py::arg("params") = std::map<std::string, double>{},
        py::arg("options") = std::map<std::string, std::string>{}, py::arg("output") = "-",
        py::arg("format") = "");
}
