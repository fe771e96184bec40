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

#include <array>
#include <cstddef>
#include <vector>

#include "qpc/comparisons.hpp"
#include "qpc/states.hpp"

namespace qpc {

/// Pairs with 1 + n.n' at or below this are treated as antipodal.
inline constexpr double kAntipodalTol = 1e-9;

/// Per-triple record of the phase-level invariants.
///
/// bargmann = amplitude_factor * defect, pancharatnam = arg(defect) in
/// (-pi, pi], and solid_angle = -2 * pancharatnam so that
/// defect = exp(-i solid_angle / 2).
struct TriangleReport {
  std::array<std::size_t, 3> triple{};
  complex bargmann;
  complex defect;
  double pancharatnam = 0.0;
  double solid_angle = 0.0;
  double amplitude_factor = 0.0;
  /// The defect sits at -1 within kAntipodalTol: the triangle is a great-circle
  /// hemisphere and the sign of the solid angle is a branch choice.
  bool hemisphere_branch = false;
};

/// B_ijk = g_ij g_jk g_ki. Throws std::invalid_argument on repeated or
/// out-of-range indices.
complex bargmann(const GramMatrix& g, std::size_t i, std::size_t j, std::size_t k);

/// kappa_ijk = u_ij u_jk u_ki. Throws std::domain_error("triangle not in
/// support ...") naming the first absent pair.
complex defect(const PhaseMatrix& u, std::size_t i, std::size_t j, std::size_t k);

/// Builds the report and cross-checks the defect obtained from the phase
/// matrix against B / |B|; a disagreement above kMatrixTol throws
/// std::logic_error. Throws std::domain_error when an overlap is at or below
/// zero_tol.
TriangleReport triangle_report(const GramMatrix& g, std::size_t i, std::size_t j, std::size_t k,
                               double zero_tol = kDefaultZeroTol);

/// (1 + ni.nj + nj.nk + nk.ni + i ni.(nj x nk)) / 4.
complex bargmann_bloch(const BlochVector& ni, const BlochVector& nj, const BlochVector& nk);

/// Oriented solid angle of the geodesic triangle, signed so that
/// arg(kappa) = -Omega / 2:
///   Omega = -2 atan2(ni.(nj x nk), 1 + ni.nj + nj.nk + nk.ni).
/// Throws std::domain_error("geodesic triangle degenerate") if any pair is
/// within kAntipodalTol of antipodal.
double solid_angle(const BlochVector& ni, const BlochVector& nj, const BlochVector& nk);

/// One report per triple i < j < k whose three overlaps exceed zero_tol,
/// in lexicographic order.
std::vector<TriangleReport> all_triangles(const GramMatrix& g, double zero_tol = kDefaultZeroTol);

}  // namespace qpc
