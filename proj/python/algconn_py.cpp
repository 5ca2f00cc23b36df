// Copyright 2026 The algconn Authors.
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

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algconn/bounds.hpp"
#include "algconn/certify.hpp"
#include "algconn/generators.hpp"
#include "algconn/graph.hpp"
#include "algconn/metrics.hpp"
#include "algconn/spectral.hpp"

namespace py = pybind11;
using namespace algconn;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array ToArray(const SymMatrix& m) {
  const int n = m.size();
  Array out({n, n});
  auto view = out.mutable_unchecked<2>();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) view(i, j) = m(i, j);
  }
  return out;
}

SymMatrix FromArray(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw py::value_error("expected a square 2-D array");
  }
  const int n = static_cast<int>(a.shape(0));
  auto view = a.unchecked<2>();
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (view(i, j) != view(j, i)) {
        throw py::value_error("matrix is not symmetric");
      }
      m.set(i, j, view(i, j));
    }
  }
  return m;
}

Graph FromPairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph::FromEdges(n, edges);
}

Family FamilyOrThrow(const std::string& name) {
  auto family = ParseFamily(name);
  if (!family) throw py::value_error("unknown family '" + name + "'");
  return *family;
}

py::dict ReportDict(const BoundReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["m"] = r.m;
  d["ell"] = r.ell;
  d["s1"] = r.s1;
  d["s2"] = r.s2;
  d["s_ell"] = r.s_ell;
  d["diameter"] = r.diameter;
  d["e_power"] = r.e_power;
  d["e_complement"] = r.e_complement;
  d["lambda2"] = r.lambda2;
  py::dict bounds;
  py::dict slacks;
  py::list tight;
  for (BoundKind k : kAllBounds) {
    const std::string name(BoundName(k));
    bounds[name.c_str()] = r[k].value;
    slacks[name.c_str()] = r[k].slack;
    if (r[k].tight(r.lambda2)) tight.append(name);
  }
  d["bounds"] = bounds;
  d["slacks"] = slacks;
  d["tight"] = tight;
  return d;
}

}  // namespace

PYBIND11_MODULE(_algconn, m) {
  m.doc() = "Eccentricity lower bounds on algebraic connectivity";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                           PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", &FromPairs, py::arg("n"), py::arg("edges"))
      .def_static(
          "parse", [](const std::string& text) { return ParseEdgeList(text); },
          py::arg("text"))
      .def_property_readonly("n", &Graph::num_nodes)
      .def_property_readonly("m", &Graph::num_edges)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("neighbors",
           [](const Graph& g, int v) {
             auto nbrs = g.neighbors(v);
             return std::vector<int>(nbrs.begin(), nbrs.end());
           })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("validate", &Graph::Validate)
      .def("to_edge_list", &ToEdgeListString)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_nodes()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def(
      "generate",
      [](const std::string& family, int n, double p, uint64_t seed) {
        return Generate({FamilyOrThrow(family), p, seed}, n);
      },
      py::arg("family"), py::arg("n"), py::arg("p") = 0.5, py::arg("seed") = 0);
  m.def("complement", &Complement);

  m.def("distances", [](const Graph& g) {
    const DistanceMatrix d = AllPairsDistances(g);
    std::vector<std::vector<std::optional<int>>> out(d.size());
    for (int i = 0; i < d.size(); ++i) {
      for (int j = 0; j < d.size(); ++j) out[i].push_back(d.at(i, j));
    }
    return out;
  });
  m.def("eccentricities", [](const Graph& g) {
    const EccentricityProfile p = Eccentricities(AllPairsDistances(g));
    return std::make_pair(p.ecc, p.diameter);
  });
  m.def(
      "count_s_ell",
      [](const Graph& g, int ell) {
        return CountWithinEccentricity(Eccentricities(AllPairsDistances(g)),
                                       ell);
      },
      py::arg("g"), py::arg("ell"));
  m.def(
      "power_graph",
      [](const Graph& g, int ell) {
        return PowerGraph(g, AllPairsDistances(g), ell);
      },
      py::arg("g"), py::arg("ell"));

  m.def("laplacian", [](const Graph& g) { return ToArray(Laplacian(g)); });
  m.def(
      "eigen_decompose",
      [](const Array& a) {
        const SpectralSummary s = EigenDecompose(FromArray(a));
        const py::ssize_t n = s.size();
        Array vecs({n, n});
        std::copy(s.eigenvectors.begin(), s.eigenvectors.end(),
                  vecs.mutable_data());
        py::dict d;
        Array values(std::vector<py::ssize_t>{n});
        std::copy(s.eigenvalues.begin(), s.eigenvalues.end(),
                  values.mutable_data());
        d["eigenvalues"] = values;
        d["eigenvectors"] = vecs;
        d["residual"] = s.residual;
        d["orthogonality_error"] = s.orthogonality_error;
        d["sweeps"] = s.sweeps;
        return d;
      },
      py::arg("a"));
  m.def("lambda2", &AlgebraicConnectivity);

  py::class_<CertificateResult>(m, "CertificateResult")
      .def_readonly("min_eigenvalue", &CertificateResult::min_eigenvalue)
      .def_readonly("tolerance", &CertificateResult::tolerance)
      .def_property_readonly("psd", &CertificateResult::psd)
      .def_property_readonly(
          "verdict", [](const CertificateResult& c) {
            return std::string(VerdictName(c.verdict));
          })
      .def("__repr__", [](const CertificateResult& c) {
        return "<CertificateResult " + std::string(VerdictName(c.verdict)) +
               " min_eig=" + std::to_string(c.min_eigenvalue) + ">";
      });
  m.def(
      "is_psd",
      [](const Array& a, std::optional<double> tol) {
        const SymMatrix s = FromArray(a);
        return tol ? IsPsd(s, *tol) : IsPsd(s);
      },
      py::arg("a"), py::arg("tol") = py::none());

  m.def("gamma", &Gamma, py::arg("n"), py::arg("ell"));
  m.def("bound_s1", &BoundS1, py::arg("s1"));
  m.def("bound_s2_over_n", &BoundS2OverN, py::arg("n"), py::arg("s2"));
  m.def("bound_g1", &BoundG1, py::arg("n"), py::arg("ell"), py::arg("s_ell"));
  m.def("bound_g1_diam", &BoundG1Diameter, py::arg("n"), py::arg("d"));
  m.def("bound_mohar", &BoundMohar, py::arg("n"), py::arg("d"));
  m.def("bound_g2", &BoundG2, py::arg("s_ell"), py::arg("ell"),
        py::arg("e_power"), py::arg("m"));
  m.def("bound_lu", &BoundLu, py::arg("n"), py::arg("d"),
        py::arg("e_complement"));
  m.def(
      "evaluate_all",
      [](const Graph& g, int ell) { return ReportDict(EvaluateAll(g, ell)); },
      py::arg("g"), py::arg("ell"));

  m.def("certify_g1_matrix", &CertifyG1Matrix, py::arg("g"), py::arg("ell"),
        py::arg("tol") = py::none());
  m.def("certify_g2_matrix", &CertifyG2Matrix, py::arg("g"), py::arg("ell"),
        py::arg("tol") = py::none());
  m.def(
      "check_chain",
      [](const Graph& g, int ell) {
        const ChainCheck c = CheckChain(g, ell);
        py::dict d;
        d["lambda2_g"] = c.lambda2_g;
        d["lambda2_power"] = c.lambda2_power;
        d["gamma"] = c.gamma_val;
        d["s1_power"] = c.s1_power;
        d["s_ell"] = c.s_ell;
        d["links_hold"] = std::vector<bool>(c.links_hold.begin(),
                                            c.links_hold.end());
        return d;
      },
      py::arg("g"), py::arg("ell"));
}
