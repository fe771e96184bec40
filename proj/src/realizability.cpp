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

#include "qpc/realizability.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "phase_search.hpp"

namespace qpc {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Potentials lambda with u_ij = lambda_i conj(lambda_j) along a BFS forest,
// each component rooted at its smallest vertex with lambda = 1.
std::vector<complex> tree_potentials(const PhaseMatrix& u) {
  const SupportGraph& support = u.support();
  std::vector<complex> lambda(u.size(), complex(0.0, 0.0));
  for (const auto& component : support.components()) {
    lambda[component.front()] = 1.0;
    std::vector<std::size_t> queue{component.front()};
    std::vector<bool> seen(u.size(), false);
    seen[component.front()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t i = queue[head];
      for (std::size_t j : support.neighbors(i)) {
        if (seen[j]) continue;
        seen[j] = true;
        lambda[j] = *u.at(j, i) * lambda[i];
        queue.push_back(j);
      }
    }
  }
  return lambda;
}

struct CoherenceDefect {
  double distance = 0.0;
  std::string where;
};

CoherenceDefect worst_coherence_defect(const PhaseMatrix& u) {
  CoherenceDefect worst;
  const std::size_t n = u.size();
  const SupportGraph& support = u.support();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : support.neighbors(i)) {
      if (j <= i) continue;
      for (std::size_t k : support.neighbors(j)) {
        if (k <= j || !support.has_edge(k, i)) continue;
        const complex kappa = *u.at(i, j) * *u.at(j, k) * *u.at(k, i);
        const double distance = std::abs(kappa - 1.0);
        if (distance > worst.distance) {
          worst.distance = distance;
          worst.where = "triangle (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ")";
        }
      }
    }
  }
  const auto lambda = tree_potentials(u);
  for (const auto& [i, j] : support.edges()) {
    const double distance = std::abs(*u.at(i, j) - lambda[i] * std::conj(lambda[j]));
    if (distance > worst.distance) {
      worst.distance = distance;
      worst.where = "cycle through edge (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    }
  }
  return worst;
}

// Phase matrix restricted to `vertices`, reindexed 0..m-1.
PhaseMatrix restrict_to(const PhaseMatrix& u, const std::vector<std::size_t>& vertices) {
  PhaseMatrix sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (auto entry = u.at(vertices[a], vertices[b])) sub.set(a, b, *entry);
    }
  }
  return sub;
}

}  // namespace

std::string GramVerdict::failed_condition() const {
  if (!hermitian_ok) return "not Hermitian (worst violation " + sci(worst_violation) + ")";
  if (!unit_diag_ok) return "diagonal not unit (worst violation " + sci(worst_violation) + ")";
  if (!psd_ok) return "not positive semidefinite (worst violation " + sci(worst_violation) + ")";
  if (!rank_ok) {
    return "rank " + std::to_string(rank_estimate) + " exceeds 2 (worst violation " +
           sci(worst_violation) + ")";
  }
  return {};
}

GramVerdict check_gram(const Eigen::MatrixXcd& g) {
  if (g.rows() != g.cols() || g.rows() == 0) {
    throw std::invalid_argument("check_gram: matrix must be square and non-empty");
  }
  GramVerdict verdict;
  const Eigen::Index n = g.rows();

  const double hermitian_error = (g - g.adjoint()).cwiseAbs().maxCoeff();
  double diag_error = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) diag_error = std::max(diag_error, std::abs(g(i, i) - 1.0));
  verdict.hermitian_ok = hermitian_error <= kHermitianTol;
  verdict.unit_diag_ok = diag_error <= kUnitDiagTol;

  const Eigen::MatrixXcd hermitian_part = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("check_gram: eigenvalue computation failed");
  }
  const Eigen::VectorXd ascending = solver.eigenvalues();
  verdict.eigenvalues.assign(ascending.data(), ascending.data() + n);
  std::reverse(verdict.eigenvalues.begin(), verdict.eigenvalues.end());

  const double lambda_max = verdict.eigenvalues.front();
  const double lambda_min = verdict.eigenvalues.back();
  verdict.psd_ok = lambda_min >= -kPsdTol * std::max(1.0, lambda_max);
  verdict.rank_estimate = 0;
  if (lambda_max > 0.0) {
    for (double lambda : verdict.eigenvalues) {
      if (lambda > kRankTol * lambda_max) ++verdict.rank_estimate;
    }
  }
  verdict.rank_ok = verdict.rank_estimate <= 2;

  double worst = 0.0;
  if (!verdict.hermitian_ok) worst = std::max(worst, hermitian_error);
  if (!verdict.unit_diag_ok) worst = std::max(worst, diag_error);
  if (!verdict.psd_ok) worst = std::max(worst, -lambda_min);
  if (!verdict.rank_ok) worst = std::max(worst, verdict.eigenvalues[2]);
  verdict.worst_violation = worst;
  return verdict;
}

StateFamily factor_states(const Eigen::MatrixXcd& g) {
  const GramVerdict verdict = check_gram(g);
  if (!verdict.realizable()) {
    throw std::domain_error("Gram matrix not realizable by qubit states: " + verdict.failed_condition());
  }
  const Eigen::Index n = g.rows();
  const Eigen::MatrixXcd hermitian_part = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("factor_states: eigendecomposition failed");
  }
  // Ascending order: the top pair sits in the last two columns.
  const Eigen::Index top = n - 1;
  const double scale1 = std::sqrt(std::max(solver.eigenvalues()[top], 0.0));
  const double scale2 = n >= 2 ? std::sqrt(std::max(solver.eigenvalues()[top - 1], 0.0)) : 0.0;

  // g_ij = sum_k lambda_k U_ik conj(U_jk) = <v_i, v_j> with v_i[k] = sqrt(lambda_k) conj(U_ik).
  std::vector<QubitState> states;
  states.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const complex first = scale1 * std::conj(solver.eigenvectors()(i, top));
    const complex second = n >= 2 ? scale2 * std::conj(solver.eigenvectors()(i, top - 1)) : complex(0.0);
    states.push_back(QubitState::normalized(first, second));
  }
  return StateFamily(std::move(states));
}

bool is_coherent(const PhaseMatrix& u, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_coherent: tol must be positive");
  return worst_coherence_defect(u).distance <= tol;
}

StateFamily realize_coherent(const PhaseMatrix& u) {
  const auto components = u.support().components();
  if (components.size() > 1) {
    std::ostringstream msg;
    msg << "support graph disconnected; components:";
    for (const auto& component : components) {
      msg << " {";
      for (std::size_t a = 0; a < component.size(); ++a) msg << (a ? "," : "") << component[a];
      msg << "}";
    }
    throw std::domain_error(msg.str());
  }
  const CoherenceDefect worst = worst_coherence_defect(u);
  if (worst.distance > kCoherenceTol) {
    throw std::domain_error("phase matrix not coherent: worst defect at " + worst.where +
                            ", |kappa - 1| = " + sci(worst.distance));
  }
  // u_ij = lambda_i conj(lambda_j) = <conj(lambda_i) e0, conj(lambda_j) e0>.
  const auto lambda = tree_potentials(u);
  std::vector<QubitState> states;
  states.reserve(u.size());
  for (const complex& l : lambda) states.push_back(QubitState::normalized(std::conj(l), 0.0));
  return StateFamily(std::move(states));
}

const char* to_string(RealizeStatus status) noexcept {
  switch (status) {
    case RealizeStatus::realizable:
      return "realizable";
    case RealizeStatus::not_realizable:
      return "not_realizable";
    case RealizeStatus::search_failed:
      return "search_failed";
  }
  return "unknown";
}

double phase_residual(const PhaseMatrix& u, const StateFamily& f, double zero_tol) {
  if (f.size() != u.size()) throw std::invalid_argument("phase_residual: size mismatch");
  double worst = 0.0;
  for (const auto& [i, j] : u.support().edges()) {
    const complex g = inner(f[i], f[j]);
    const double modulus = std::abs(g);
    const double distance = modulus <= zero_tol ? 2.0 : std::abs(g / modulus - *u.at(i, j));
    worst = std::max(worst, distance);
  }
  return worst;
}

RealizabilityResult realize_phases(const PhaseMatrix& u, const SearchConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1) {
    throw std::invalid_argument("realize_phases: restarts and max_iters must be positive");
  }
  if (!(cfg.soft_floor > 0.0) || !(cfg.realize_tol > 0.0) || !(cfg.zero_tol > 0.0)) {
    throw std::invalid_argument("realize_phases: tolerances must be positive");
  }
  // Structural re-check; PhaseMatrix enforces these on construction.
  for (const auto& [i, j] : u.support().edges()) {
    const complex a = *u.at(i, j);
    const complex b = *u.at(j, i);
    if (std::abs(std::abs(a) - 1.0) > kMatrixTol || std::abs(a * b - 1.0) > kMatrixTol) {
      throw std::invalid_argument("realize_phases: malformed phase matrix at (" + std::to_string(i) +
                                  ", " + std::to_string(j) + ")");
    }
  }

  RealizabilityResult result;
  const auto components = u.support().components();
  std::vector<QubitState> states(u.size(), QubitState(1.0, 0.0));
  std::ostringstream diag;
  bool all_found = true;

  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& vertices = components[c];
    if (vertices.size() == 1) continue;
    const PhaseMatrix sub = restrict_to(u, vertices);
    std::vector<QubitState> found;
    if (is_coherent(sub, kCoherenceTol)) {
      found = realize_coherent(sub).states();
      diag << "component " << c << ": coherent, realized on a single ray\n";
    } else {
      // Descents that end with an overlap near the soft floor satisfy the
      // smoothed residual without a well-defined phase; they do not count.
      const double healthy_overlap = 10.0 * cfg.soft_floor;
      // Slowly converging descents can end just inside realize_tol; keep
      // restarting until one lands well inside it.
      const double early_exit = 1e-3 * cfg.realize_tol;
      double best = std::numeric_limits<double>::infinity();
      bool best_healthy = false;
      int used = 0;
      for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(restart)};
        std::array<std::uint32_t, 2> words{};
        seq.generate(words.begin(), words.end());
        const std::uint64_t restart_seed = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];

        auto outcome = detail::descend_phases(sub, restart_seed, cfg.max_iters, cfg.soft_floor);
        used = restart + 1;
        const double residual = phase_residual(sub, StateFamily(outcome.states), cfg.zero_tol);
        const bool healthy = outcome.min_edge_overlap > healthy_overlap;
        if ((healthy && !best_healthy) || (healthy == best_healthy && residual < best)) {
          best = residual;
          best_healthy = healthy;
          found = std::move(outcome.states);
        }
        if (best_healthy && best <= early_exit) break;
      }
      diag << "component " << c << ": searched, " << used << " restart(s), best residual " << sci(best)
           << "\n";
      if (best > cfg.realize_tol) all_found = false;
    }
    for (std::size_t a = 0; a < vertices.size(); ++a) states[vertices[a]] = found[a];
  }

  if (components.size() > 1) {
    diag << components.size()
         << " support components realized independently; overlaps between components are unconstrained\n";
  }
  StateFamily family(std::move(states));
  result.residual = phase_residual(u, family, cfg.zero_tol);
  if (all_found && result.residual <= cfg.realize_tol) {
    result.status = RealizeStatus::realizable;
    result.certificate = std::move(family);
  } else {
    result.status = RealizeStatus::search_failed;
    diag << "search inconclusive: the multi-start descent is heuristic and failing to reach "
            "the tolerance does not prove the phase matrix unrealizable\n";
  }
  result.diagnostics = diag.str();
  return result;
}

RealizabilityResult realize_gram(const Eigen::MatrixXcd& g) {
  RealizabilityResult result;
  const GramVerdict verdict = check_gram(g);
  if (!verdict.realizable()) {
    result.status = RealizeStatus::not_realizable;
    result.residual = verdict.worst_violation;
    result.diagnostics = verdict.failed_condition();
    return result;
  }
  StateFamily family = factor_states(g);
  const GramMatrix rebuilt = gram(family);
  result.residual = (rebuilt.matrix() - g).cwiseAbs().maxCoeff();
  result.status = RealizeStatus::realizable;
  result.certificate = std::move(family);
  result.diagnostics = "rank " + std::to_string(verdict.rank_estimate) + " factorization";
  return result;
}

}  // namespace qpc
