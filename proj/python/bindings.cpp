// Copyright 2026 The choimaps Authors
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
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "choimaps/cli.hpp"
#include "choimaps/detection.hpp"
#include "choimaps/linalg.hpp"
#include "choimaps/maps.hpp"
#include "choimaps/report.hpp"
#include "choimaps/states.hpp"

namespace py = pybind11;
using namespace choimaps;

namespace {

ComplexMatrix to_matrix(const Eigen::MatrixXcd& m) { return ComplexMatrix(m); }

// JSON values cross the boundary as plain Python objects.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Subsystem subsystem_from(const std::string& s) {
  if (s == "A") return Subsystem::A;
  if (s == "B") return Subsystem::B;
  throw std::invalid_argument("subsystem must be 'A' or 'B'");
}

Tolerance tol_from(double psd_tol) {
  Tolerance t;
  t.psd_tol = psd_tol;
  return t;
}

BipartiteState state_for(const std::string& family, double beta, double gamma, double b) {
  switch (family_from_string(family)) {
    case Family::RhoBetaGamma:
      return build_rho_beta_gamma({beta, gamma});
    case Family::SigmaB:
      return build_sigma_b({b});
    case Family::VarrhoB:
      return build_varrho_b({b});
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Four-parameter Choi-type maps on M_4 and entanglement detection";

  py::class_<MapParams>(m, "MapParams")
      .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_static("parse", &MapParams::parse)
      .def_property_readonly("w", &MapParams::w)
      .def_property_readonly("x", &MapParams::x)
      .def_property_readonly("y", &MapParams::y)
      .def_property_readonly("z", &MapParams::z)
      .def("__repr__", [](const MapParams& p) { return "MapParams(" + p.to_string() + ")"; });

  m.def("tensor", [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return tensor(to_matrix(a), to_matrix(b)).eigen();
  });
  m.def(
      "partial_transpose",
      [](const Eigen::MatrixXcd& rho, std::size_t dimA, std::size_t dimB, const std::string& which) {
        return partial_transpose(to_matrix(rho), dimA, dimB, subsystem_from(which)).eigen();
      },
      py::arg("rho"), py::arg("dimA"), py::arg("dimB"), py::arg("subsystem") = "B");
  m.def("eig_hermitian", [](const Eigen::MatrixXcd& a) { return eig_hermitian(to_matrix(a)); });
  m.def("min_eigenvalue", [](const Eigen::MatrixXcd& a) { return min_eigenvalue(to_matrix(a)); });
  m.def(
      "is_psd", [](const Eigen::MatrixXcd& a, double psd_tol) { return is_psd(to_matrix(a), tol_from(psd_tol)); },
      py::arg("m"), py::arg("psd_tol") = 1e-10);
  m.def("principal_minors", [](const Eigen::MatrixXcd& a) {
    std::vector<std::tuple<std::vector<std::size_t>, double>> out;
    for (const auto& pm : principal_minors(to_matrix(a))) out.emplace_back(pm.indices, pm.value);
    return out;
  });

  m.def("apply_map_closed",
        [](const MapParams& p, const Eigen::MatrixXcd& x) { return apply_map_closed(p, to_matrix(x)).eigen(); });
  m.def("apply_map_kraus",
        [](const MapParams& p, const Eigen::MatrixXcd& x) { return apply_map_kraus(p, to_matrix(x)).eigen(); });
  m.def("extend_map", [](const MapParams& p, std::size_t dimA, const Eigen::MatrixXcd& rho) {
    return extend_map(p, dimA, to_matrix(rho)).eigen();
  });

  m.def("build_rho_beta_gamma",
        [](double beta, double gamma) { return build_rho_beta_gamma({beta, gamma}).matrix().eigen(); });
  m.def("build_sigma_b", [](double b) { return build_sigma_b({b}).matrix().eigen(); });
  m.def("build_varrho_b", [](double b) { return build_varrho_b({b}).matrix().eigen(); });
  m.def("pauli_local_unitaries", [] {
    std::vector<Eigen::MatrixXcd> out;
    for (const auto& u : pauli_local_unitaries()) out.push_back(u.eigen());
    return out;
  });
  m.def("random_density_matrix",
        [](std::size_t dim, std::uint64_t seed) { return random_density_matrix(dim, seed).eigen(); });

  m.def("lambda_formula",
        [](const MapParams& p, double beta, double gamma) { return lambda_formula(p, RhoFamilyParams{beta, gamma}); });
  m.def("detection_interval_beta", [](const MapParams& p, double gamma) -> py::object {
    const auto iv = detection_interval_beta(p, gamma);
    if (iv.empty) return py::none();
    return py::make_tuple(iv.lo, iv.hi, iv.lo_closed, iv.hi_closed);
  });
  m.def(
      "detect",
      [](const std::string& family, const MapParams& p, double beta, double gamma, double b, double psd_tol) {
        return to_python(detect(state_for(family, beta, gamma, b), p, tol_from(psd_tol)));
      },
      py::arg("family"), py::arg("map"), py::arg("beta") = 0.0, py::arg("gamma") = 0.0, py::arg("b") = 0.5,
      py::arg("psd_tol") = 1e-10);
  m.def(
      "verify_map_positivity",
      [](const MapParams& p, std::size_t samples, std::uint64_t seed) {
        return to_python(verify_map_positivity(p, samples, seed));
      },
      py::arg("map"), py::arg("samples") = 10000, py::arg("seed") = 0);
  m.def("sigma_b_mapped_closed_form",
        [](double b, const MapParams& p) { return sigma_b_mapped_closed_form(b, p).eigen(); });
  m.def("nondetection_certificate", [](double b, const MapParams& p) { return nondetection_certificate(b, p); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command-line front end in-process; returns (exit_code, stdout, stderr).");

  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);
}
