// Copyright 2026 The mediahom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mediahom/collision.hpp"
#include "mediahom/config.hpp"
#include "mediahom/convergence.hpp"
#include "mediahom/errors.hpp"
#include "mediahom/network.hpp"
#include "mediahom/qmath.hpp"
#include "mediahom/scenario.hpp"

namespace py = pybind11;
using namespace mediahom;

namespace {

using Dims = std::vector<std::size_t>;
using EdgeTuple = std::tuple<std::size_t, std::size_t, double>;

NetworkSpec make_spec(std::size_t n_sites, const std::vector<EdgeTuple>& edges,
                      std::size_t d, NetworkModel model) {
  NetworkSpec spec;
  spec.graph = CouplingGraph(n_sites);
  for (const auto& [a, b, j] : edges) spec.graph.add_edge(a, b, j);
  spec.local_dim = d;
  spec.model = model;
  return spec;
}

py::tuple table_to_python(const ResultTable& t) {
  return py::make_tuple(t.columns(), t.rows());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collision-model dynamics of spin networks coupled to ancilla baths";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ModelError>(m, "ModelError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<DegeneracyError>(m, "DegeneracyError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<UndefinedRatioError>(m, "UndefinedRatioError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  // ---- qmath ----
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix, double>(), py::arg("matrix"),
           py::arg("tol") = tol::kStructural)
      .def_static("pure", &DensityMatrix::pure)
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed)
      .def_static("diag_qubit", &DensityMatrix::diag_qubit)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("matrix", &DensityMatrix::matrix);
  py::implicitly_convertible<ComplexMatrix, DensityMatrix>();

  m.def("tensor", [](const std::vector<ComplexMatrix>& ops) { return tensor(ops); });
  m.def("partial_trace",
        [](const ComplexMatrix& op, const Dims& dims, std::vector<std::size_t> keep) {
          return partial_trace(op, SubsystemShape(dims), std::move(keep));
        },
        py::arg("op"), py::arg("dims"), py::arg("keep"));
  m.def("hermitian_eig", [](const ComplexMatrix& h) {
    auto e = hermitian_eig(h);
    return py::make_tuple(e.values, e.vectors);
  });
  m.def("unitary_from_hamiltonian", &unitary_from_hamiltonian, py::arg("h"), py::arg("t"));
  m.def("trace_norm", &trace_norm);
  m.def("trace_distance", &trace_distance);
  m.def("von_neumann_entropy", &von_neumann_entropy);
  m.def("concurrence", &concurrence);
  m.def("validate_density",
        [](const ComplexMatrix& rho, double t) {
          const auto r = validate_density(rho, t);
          py::dict d;
          d["hermiticity_defect"] = r.hermiticity_defect;
          d["trace_defect"] = r.trace_defect;
          d["min_eigenvalue"] = r.min_eigenvalue;
          d["passed"] = r.passed;
          return d;
        },
        py::arg("rho"), py::arg("tol") = tol::kStructural);

  // ---- network ----
  m.def("swap_operator",
        [](const Dims& dims, std::size_t i, std::size_t j) {
          return swap_operator(SubsystemShape(dims), i, j);
        });
  m.def("swap_network_hamiltonian",
        [](std::size_t n, const std::vector<EdgeTuple>& edges, std::size_t d) {
          return swap_network_hamiltonian(make_spec(n, edges, d, SwapModel{}));
        },
        py::arg("n_sites"), py::arg("edges"), py::arg("d") = 2);
  m.def("xxz_hamiltonian",
        [](std::size_t n, const std::vector<EdgeTuple>& edges, double delta) {
          return xxz_hamiltonian(make_spec(n, edges, 2, XxzModel{delta}));
        },
        py::arg("n_sites"), py::arg("edges"), py::arg("delta"));
  m.def("chain_edges", [](std::size_t n, double j) {
    std::vector<EdgeTuple> out;
    const auto chain = chain_graph(n, j);
    for (const auto& e : chain.edges()) out.emplace_back(e.a, e.b, e.coupling);
    return out;
  });
  m.def("interaction_hamiltonian",
        [](const Dims& dims, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
          return interaction_hamiltonian(SubsystemShape(dims), pairs);
        },
        py::arg("dims"), py::arg("ancilla_site_pairs"));
  m.def("excitation_observable", [](const ComplexVector& phi, const Dims& dims) {
    return excitation_observable(phi, SubsystemShape(dims));
  });

  // ---- collision ----
  py::class_<Superoperator>(m, "Superoperator")
      .def(py::init<std::size_t, ComplexMatrix>())
      .def_static("identity", &Superoperator::identity)
      .def_static("from_kraus", &Superoperator::from_kraus)
      .def_static("unitary_conjugation", &Superoperator::unitary_conjugation)
      .def_property_readonly("dim", &Superoperator::dim)
      .def_property_readonly("matrix", &Superoperator::matrix)
      .def("apply", &Superoperator::apply);

  py::class_<CollisionChannel>(m, "CollisionChannel")
      .def_property_readonly("system_dim", &CollisionChannel::system_dim)
      .def_property_readonly("joint_unitary", &CollisionChannel::joint_unitary)
      .def_property_readonly("ancilla_state", &CollisionChannel::ancilla_state)
      .def_property_readonly("interaction_time", &CollisionChannel::interaction_time)
      .def("apply", &CollisionChannel::apply)
      .def("kraus_operators", &CollisionChannel::kraus);

  m.def("build_channel",
        py::overload_cast<const ComplexMatrix&, const ComplexMatrix&, const DensityMatrix&,
                          double>(&build_channel),
        py::arg("system_h"), py::arg("interaction_h"), py::arg("omega"), py::arg("t"));
  m.def("build_two_bath_channel", &build_two_bath_channel, py::arg("system_h"),
        py::arg("interaction_h_b"), py::arg("interaction_h_c"), py::arg("omega_b"),
        py::arg("nu_c"), py::arg("t"));
  m.def("iterate", &iterate, py::arg("channel"), py::arg("rho0"), py::arg("n"));
  m.def("superoperator_matrix", &superoperator_matrix);
  m.def("apply_sequence", &apply_sequence);
  m.def("mix", &mix);

  // ---- convergence ----
  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("is_relaxing", &ConvergenceReport::is_relaxing)
      .def_readonly("reason", &ConvergenceReport::reason)
      .def_readonly("fixed_point", &ConvergenceReport::fixed_point)
      .def_readonly("spectral_gap", &ConvergenceReport::spectral_gap)
      .def_readonly("peripheral_count", &ConvergenceReport::peripheral_count)
      .def_readonly("residual", &ConvergenceReport::residual)
      .def_readonly("theorem_violation", &ConvergenceReport::theorem_violation)
      .def_readonly("eigenvalues", &ConvergenceReport::eigenvalues);

  m.def("is_relaxing", &is_relaxing, py::arg("s"), py::arg("tol") = tol::kPeripheral);
  m.def("spectral_fixed_point", &spectral_fixed_point);
  m.def("iterative_fixed_point",
        [](const CollisionChannel& ch, const DensityMatrix& rho0, double t, std::size_t max_iter) {
          auto r = iterative_fixed_point(ch, rho0, t, max_iter);
          return py::make_tuple(r.state, r.iterations, r.residual, r.converged);
        },
        py::arg("channel"), py::arg("rho0"), py::arg("tol"), py::arg("max_iter"));
  m.def("factorized_eigenvector_count",
        [](const ComplexMatrix& h, const Dims& dims, const ComplexVector& phi) {
          return factorized_eigenvector_count(h, SubsystemShape(dims), phi);
        });
  m.def("haag_mixture_check", &haag_mixture_check, py::arg("relaxing"), py::arg("other"),
        py::arg("p"), py::arg("tol") = tol::kPeripheral);
  m.def("forgetting_metric", &forgetting_metric);
  m.def("check_invariance",
        [](const ComplexMatrix& u, const DensityMatrix& rho, const DensityMatrix& w, double t) {
          const auto r = check_invariance(u, rho, w, t);
          return py::make_tuple(r.commutator_norm, r.pass);
        });
  m.def("entropy_ratio", &entropy_ratio);

  // ---- scenarios ----
  m.def("run_scenario",
        [](const std::string& config_json) {
          return table_to_python(run_scenario(parse_config(nlohmann::json::parse(config_json))));
        },
        py::arg("config_json"),
        "Runs a JSON scenario config; returns (columns, rows).");
  m.def("sweep",
        [](const std::string& config_json, const std::string& param,
           const std::vector<double>& values, const std::string& label, std::size_t jobs) {
          std::vector<nlohmann::json> vals(values.begin(), values.end());
          return table_to_python(
              sweep(parse_config(nlohmann::json::parse(config_json)), param, vals, label, jobs));
        },
        py::arg("config_json"), py::arg("param"), py::arg("values"), py::arg("label") = "",
        py::arg("jobs") = 1);
  m.def("scenario_csv", [](const std::string& config_json) {
    std::ostringstream os;
    emit_csv(run_scenario(parse_config(nlohmann::json::parse(config_json))), os);
    return os.str();
  });

#ifdef MEDIAHOM_VERSION
  m.attr("__version__") = MEDIAHOM_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
