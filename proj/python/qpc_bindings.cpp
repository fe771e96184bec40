// Copyright 2026 The qpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Families cross the boundary as (N, 2) complex arrays of
// amplitudes; phase matrices as the PhaseMatrix class.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "qpc/comparisons.hpp"
#include "qpc/invariants.hpp"
#include "qpc/io.hpp"
#include "qpc/realizability.hpp"
#include "qpc/states.hpp"
#include "qpc/verify.hpp"

namespace py = pybind11;
using namespace qpc;

namespace {

using Amplitudes = Eigen::Matrix<complex, Eigen::Dynamic, 2, Eigen::RowMajor>;

StateFamily to_family(const Amplitudes& a) {
  std::vector<QubitState> states;
  for (Eigen::Index i = 0; i < a.rows(); ++i) states.emplace_back(a(i, 0), a(i, 1));
  return StateFamily(std::move(states));
}

Amplitudes to_amplitudes(const StateFamily& f) {
  Amplitudes a(static_cast<Eigen::Index>(f.size()), 2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    a(static_cast<Eigen::Index>(i), 0) = f[i].c0();
    a(static_cast<Eigen::Index>(i), 1) = f[i].c1();
  }
  return a;
}

BlochVector to_vector(const std::array<double, 3>& n) { return BlochVector(n); }

py::dict report_dict(const TriangleReport& t) {
  py::dict d;
  d["triple"] = py::make_tuple(t.triple[0], t.triple[1], t.triple[2]);
  d["bargmann"] = t.bargmann;
  d["defect"] = t.defect;
  d["pancharatnam"] = t.pancharatnam;
  d["solid_angle"] = t.solid_angle;
  d["amplitude_factor"] = t.amplitude_factor;
  d["hemisphere_branch"] = t.hemisphere_branch;
  return d;
}

py::dict verdict_dict(const GramVerdict& v) {
  py::dict d;
  d["realizable"] = v.realizable();
  d["hermitian_ok"] = v.hermitian_ok;
  d["unit_diag_ok"] = v.unit_diag_ok;
  d["psd_ok"] = v.psd_ok;
  d["rank_ok"] = v.rank_ok;
  d["rank_estimate"] = v.rank_estimate;
  d["eigenvalues"] = v.eigenvalues;
  d["worst_violation"] = v.worst_violation;
  d["failed_condition"] = v.failed_condition();
  return d;
}

py::dict result_dict(const RealizabilityResult& r) {
  py::dict d;
  d["status"] = to_string(r.status);
  d["residual"] = r.residual;
  d["diagnostics"] = r.diagnostics;
  d["certificate"] = r.certificate ? py::cast(to_amplitudes(*r.certificate)) : py::none();
  return d;
}

PhaseMatrix make_phase(const Eigen::MatrixXcd& dense, const std::vector<Edge>& edges) {
  if (dense.rows() != dense.cols()) throw std::invalid_argument("phase matrix must be square");
  SupportGraph support(static_cast<std::size_t>(dense.rows()));
  for (const auto& [i, j] : edges) support.add_edge(i, j);
  return PhaseMatrix::from_dense(dense, support);
}

Eigen::MatrixXcd phase_dense(const PhaseMatrix& u) {
  const auto n = static_cast<Eigen::Index>(u.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(n, n, complex(nan, nan));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (auto e = u.at(i, j)) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *e;
    }
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_qpc, m) {
  m.doc() = "Pairwise-comparison structure of qubit state families";

  m.attr("DEFAULT_ZERO_TOL") = kDefaultZeroTol;
  m.attr("REALIZE_TOL") = kRealizeTol;

  py::class_<PhaseMatrix>(m, "PhaseMatrix")
      .def(py::init(&make_phase), py::arg("dense"), py::arg("support"),
           "Phase matrix from a dense array and its support edges.")
      .def_property_readonly("size", &PhaseMatrix::size)
      .def_property_readonly("support", [](const PhaseMatrix& u) { return u.support().edges(); })
      .def_property_readonly("is_complete", &PhaseMatrix::is_complete)
      .def("at", &PhaseMatrix::at, py::arg("i"), py::arg("j"))
      .def("dense", &phase_dense, "Dense array with NaN off the support.");

  m.def("random_family", [](std::size_t n, std::uint64_t seed) { return to_amplitudes(random_family(n, seed)); },
        py::arg("n"), py::arg("seed") = 0);
  m.def("to_bloch", [](complex c0, complex c1) { return to_bloch(QubitState(c0, c1)).array(); },
        py::arg("c0"), py::arg("c1"));
  m.def("from_bloch", [](const std::array<double, 3>& n) {
    const auto s = from_bloch(n);
    return std::make_pair(s.c0(), s.c1());
  });

  m.def("gram", [](const Amplitudes& a) { return gram(to_family(a)).matrix(); }, py::arg("family"));
  m.def("probabilities", [](const Amplitudes& a) { return probabilities(gram(to_family(a))).matrix(); },
        py::arg("family"));
  m.def("phases", [](const Amplitudes& a, double zero_tol) { return phases(gram(to_family(a)), zero_tol); },
        py::arg("family"), py::arg("zero_tol") = kDefaultZeroTol);
  m.def("orthogonality_edges",
        [](const Amplitudes& a, double zero_tol) { return orthogonality_graph(gram(to_family(a)), zero_tol).edges(); },
        py::arg("family"), py::arg("zero_tol") = kDefaultZeroTol);
  m.def("check_matching", [](std::size_t n, const std::vector<Edge>& edges) {
    SupportGraph g(n);
    for (const auto& [i, j] : edges) g.add_edge(i, j);
    return check_matching(g);
  }, py::arg("n"), py::arg("edges"));

  m.def("bargmann", [](const Amplitudes& a, std::size_t i, std::size_t j, std::size_t k) {
    return bargmann(gram(to_family(a)), i, j, k);
  }, py::arg("family"), py::arg("i"), py::arg("j"), py::arg("k"));
  m.def("defect", &defect, py::arg("u"), py::arg("i"), py::arg("j"), py::arg("k"));
  m.def("triangle_report", [](const Amplitudes& a, std::size_t i, std::size_t j, std::size_t k, double zero_tol) {
    return report_dict(triangle_report(gram(to_family(a)), i, j, k, zero_tol));
  }, py::arg("family"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("zero_tol") = kDefaultZeroTol);
  m.def("all_triangles", [](const Amplitudes& a, double zero_tol) {
    py::list out;
    for (const auto& t : all_triangles(gram(to_family(a)), zero_tol)) out.append(report_dict(t));
    return out;
  }, py::arg("family"), py::arg("zero_tol") = kDefaultZeroTol);
  m.def("bargmann_bloch", [](const std::array<double, 3>& a, const std::array<double, 3>& b,
                             const std::array<double, 3>& c) {
    return bargmann_bloch(to_vector(a), to_vector(b), to_vector(c));
  });
  m.def("solid_angle", [](const std::array<double, 3>& a, const std::array<double, 3>& b,
                          const std::array<double, 3>& c) {
    return solid_angle(to_vector(a), to_vector(b), to_vector(c));
  });

  m.def("check_gram", [](const Eigen::MatrixXcd& g) { return verdict_dict(check_gram(g)); }, py::arg("gram"));
  m.def("factor_states", [](const Eigen::MatrixXcd& g) { return to_amplitudes(factor_states(g)); },
        py::arg("gram"));
  m.def("realize_gram", [](const Eigen::MatrixXcd& g) { return result_dict(realize_gram(g)); }, py::arg("gram"));
  m.def("is_coherent", &is_coherent, py::arg("u"), py::arg("tol") = kCoherenceTol);
  m.def("realize_coherent", [](const PhaseMatrix& u) { return to_amplitudes(realize_coherent(u)); },
        py::arg("u"));
  m.def("realize_phases",
        [](const PhaseMatrix& u, int restarts, int max_iters, std::uint64_t seed, double soft_floor,
           double realize_tol, double zero_tol) {
          SearchConfig cfg;
          cfg.restarts = restarts;
          cfg.max_iters = max_iters;
          cfg.seed = seed;
          cfg.soft_floor = soft_floor;
          cfg.realize_tol = realize_tol;
          cfg.zero_tol = zero_tol;
          RealizabilityResult r;
          {
            py::gil_scoped_release release;
            r = realize_phases(u, cfg);
          }
          return result_dict(r);
        },
        py::arg("u"), py::arg("restarts") = 32, py::arg("max_iters") = 500, py::arg("seed") = 0,
        py::arg("soft_floor") = 1e-6, py::arg("realize_tol") = kRealizeTol,
        py::arg("zero_tol") = kDefaultZeroTol);
  m.def("phase_residual", [](const PhaseMatrix& u, const Amplitudes& a, double zero_tol) {
    return phase_residual(u, to_family(a), zero_tol);
  }, py::arg("u"), py::arg("family"), py::arg("zero_tol") = kDefaultZeroTol);

  m.def("run_verification", [](std::uint64_t seed, int cases) {
    py::list out;
    for (const auto& r : run_verification(seed, cases)) {
      py::dict d;
      d["name"] = r.name;
      d["cases_run"] = r.cases_run;
      d["max_discrepancy"] = r.max_discrepancy;
      d["tolerance"] = r.tolerance;
      d["pass"] = r.pass;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 0, py::arg("cases") = 100);
  m.def("analyze_json", [](const Amplitudes& a, double zero_tol) { return io::dump(io::analyze(to_family(a), zero_tol)); },
        py::arg("family"), py::arg("zero_tol") = kDefaultZeroTol);
}
