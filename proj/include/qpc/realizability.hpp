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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qpc/comparisons.hpp"
#include "qpc/states.hpp"

namespace qpc {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitDiagTol = 1e-10;
/// Smallest eigenvalue must be >= -kPsdTol * max(1, lambda_max).
inline constexpr double kPsdTol = 1e-10;
/// Eigenvalues above kRankTol * lambda_max count towards the rank.
inline constexpr double kRankTol = 1e-10;
inline constexpr double kRealizeTol = 1e-7;
inline constexpr double kCoherenceTol = 1e-9;

/// Outcome of testing a raw complex matrix against the qubit Gram conditions:
/// Hermitian, unit diagonal, positive semidefinite, rank at most 2.
struct GramVerdict {
  bool hermitian_ok = false;
  bool unit_diag_ok = false;
  bool psd_ok = false;
  bool rank_ok = false;
  /// Eigenvalues of the Hermitian part, descending.
  std::vector<double> eigenvalues;
  int rank_estimate = 0;
  /// Largest amount by which any condition is missed (0 when all hold).
  double worst_violation = 0.0;

  bool realizable() const noexcept { return hermitian_ok && unit_diag_ok && psd_ok && rank_ok; }
  /// Name and measure of the first failing condition; empty when realizable.
  std::string failed_condition() const;
};

/// Throws std::invalid_argument for a non-square or empty matrix.
GramVerdict check_gram(const Eigen::MatrixXcd& g);

/// States whose Gram matrix equals g, from the top two eigenpairs. Throws
/// std::domain_error naming the violated condition when check_gram fails.
StateFamily factor_states(const Eigen::MatrixXcd& g);
inline StateFamily factor_states(const GramMatrix& g) { return factor_states(g.matrix()); }

/// True iff every support triangle has |kappa - 1| <= tol and every support
/// edge agrees within tol with potentials propagated along a spanning forest,
/// i.e. u_ij = lambda_i conj(lambda_j) on each connected component.
bool is_coherent(const PhaseMatrix& u, double tol = kCoherenceTol);

/// States on a single ray with phases(gram(result)) = u on every support
/// edge. Throws std::domain_error when u is not coherent within kCoherenceTol
/// (naming the worst triangle or edge) or when the support is disconnected
/// (listing the components).
StateFamily realize_coherent(const PhaseMatrix& u);

struct SearchConfig {
  int restarts = 32;
  int max_iters = 500;
  std::uint64_t seed = 0;
  /// Floor under |g_ij| in the smoothed residual.
  double soft_floor = 1e-6;
  double realize_tol = kRealizeTol;
  double zero_tol = kDefaultZeroTol;
};

enum class RealizeStatus { realizable, not_realizable, search_failed };

const char* to_string(RealizeStatus status) noexcept;

struct RealizabilityResult {
  RealizeStatus status = RealizeStatus::search_failed;
  std::optional<StateFamily> certificate;
  /// For phase targets: max over support edges of |g_ij / |g_ij| - u_ij|.
  /// For Gram targets: max entrywise |gram(certificate) - g|.
  double residual = 0.0;
  std::string diagnostics;
};

/// Max over support edges of |g_ij / |g_ij| - u_ij| for the family's Gram
/// matrix; an edge whose overlap is at or below zero_tol contributes 2.
double phase_residual(const PhaseMatrix& u, const StateFamily& f, double zero_tol = kDefaultZeroTol);

/// Searches for qubit states whose phase matrix matches u on every support
/// edge.
///
/// Each connected component of the support graph is handled separately:
/// coherent components go through realize_coherent, others through a
/// multi-start Levenberg-Marquardt descent on
///   sum_edges |g_ij / max(|g_ij|, soft_floor) - u_ij|^2
/// over Bloch angles and per-state phases (state 0 has its phase and azimuth
/// pinned). The search is sound but not complete: search_failed does not
/// prove that u is unrealizable. Restarts run in index order and the first
/// one reaching realize_tol wins, so results are deterministic per seed.
RealizabilityResult realize_phases(const PhaseMatrix& u, const SearchConfig& cfg = {});

/// check_gram followed by factor_states; not_realizable names the failing
/// condition.
RealizabilityResult realize_gram(const Eigen::MatrixXcd& g);

}  // namespace qpc
