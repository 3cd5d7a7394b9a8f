// Copyright 2026 The spindla authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spindla/decomposition.hpp"
#include "spindla/verify.hpp"

namespace py = pybind11;
using namespace spindla;

namespace {

std::string analyze_json(int nc, int np, double gamma_c, double gamma_p,
                         uint64_t seed) {
  ModelParams p{RegisterSpec(nc, np), gamma_c, gamma_p};
  return report_to_json(analyze(p, seed)).dump();
}

int dla_dim(int nc, int np, double gamma_c, double gamma_p) {
  ModelParams p{RegisterSpec(nc, np), gamma_c, gamma_p};
  return closure(model_generators(p)).dim();
}

int closure_dim(const std::vector<std::string>& operator_texts) {
  std::vector<Operator> gens;
  for (const std::string& text : operator_texts) {
    gens.push_back(parse_operator(text));
  }
  return closure(gens).dim();
}

py::list run_checks(int max_n, uint64_t seed, const std::string& suite) {
  py::list out;
  for (const CheckResult& r : run_all(max_n, seed, suite)) {
    py::dict d;
    d["name"] = r.name;
    d["params"] = r.params;
    d["passed"] = r.passed;
    d["residual"] = r.residual;
    d["elapsed"] = r.elapsed;
    out.append(d);
  }
  return out;
}

py::list dims_table(int n) {
  py::list out;
  for (const Partition& shape : partitions(n)) {
    out.append(py::make_tuple(shape.str(), tableau_count(shape),
                              subspace_dim(shape)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "dynamical Lie algebras of centrally coupled spin networks (C++ core)";

  py::register_exception<DimensionError>(m, "DimensionError",
                                         PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ParseError>(m, "OperatorParseError",
                                     PyExc_ValueError);

  m.def("analyze_json", &analyze_json, py::arg("nc"), py::arg("np"),
        py::arg("gamma_c") = 1.0, py::arg("gamma_p") = 2.0,
        py::arg("seed") = 42,
        "Full controllability report as a JSON string.");
  m.def("dla_dim", &dla_dim, py::arg("nc"), py::arg("np"),
        py::arg("gamma_c") = 1.0, py::arg("gamma_p") = 2.0,
        "Dimension of the model's dynamical Lie algebra.");
  m.def("closure_dim", &closure_dim, py::arg("operator_texts"),
        "Lie-closure dimension of operators given in the text format, one "
        "string per generator.");
  m.def("run_checks", &run_checks, py::arg("max_n") = 5, py::arg("seed") = 42,
        py::arg("suite") = "all",
        "Run the verification checks; returns a list of result dicts.");
  m.def("dims_table", &dims_table, py::arg("n"),
        "(shape, tableaux, dim) rows for all partitions of n.");
  m.def("collective_algebra_dim",
        [](int n) { return build_L_basis(n).dim(); }, py::arg("n"),
        "Dimension of the collective operator algebra on n sites.");
  m.def("commutant_dim", [](int n) { return build_LG_basis(n).dim(); },
        py::arg("n"),
        "Dimension of the symmetric-group commutant in u(2^n).");
  m.def("max_qubits", &max_qubits,
        "Register size cap (SPINDLA_MAX_QUBITS overrides).");
}
