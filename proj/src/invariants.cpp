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

#include "qpc/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpc {

namespace {

void check_triple(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  if (i >= n || j >= n || k >= n) {
    throw std::invalid_argument("triangle index out of range for size " + std::to_string(n));
  }
  if (i == j || j == k || k == i) {
    throw std::invalid_argument("triangle indices must be pairwise distinct");
  }
}

double dot(const BlochVector& a, const BlochVector& b) {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

double triple_product(const BlochVector& a, const BlochVector& b, const BlochVector& c) {
  return a.x() * (b.y() * c.z() - b.z() * c.y()) + a.y() * (b.z() * c.x() - b.x() * c.z()) +
         a.z() * (b.x() * c.y() - b.y() * c.x());
}

}  // namespace

complex bargmann(const GramMatrix& g, std::size_t i, std::size_t j, std::size_t k) {
  check_triple(g.size(), i, j, k);
  return g(i, j) * g(j, k) * g(k, i);
}

complex defect(const PhaseMatrix& u, std::size_t i, std::size_t j, std::size_t k) {
  check_triple(u.size(), i, j, k);
  const std::array<Edge, 3> sides{{{i, j}, {j, k}, {k, i}}};
  complex product(1.0, 0.0);
  for (const auto& [a, b] : sides) {
    const auto entry = u.at(a, b);
    if (!entry) {
      throw std::domain_error("triangle not in support: pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") is absent");
    }
    product *= *entry;
  }
  return product;
}

TriangleReport triangle_report(const GramMatrix& g, std::size_t i, std::size_t j, std::size_t k,
                               double zero_tol) {
  check_triple(g.size(), i, j, k);
  if (!(zero_tol > 0.0)) throw std::invalid_argument("zero_tol must be positive");
  const double a_ij = std::abs(g(i, j));
  const double a_jk = std::abs(g(j, k));
  const double a_ki = std::abs(g(k, i));
  if (a_ij <= zero_tol || a_jk <= zero_tol || a_ki <= zero_tol) {
    throw std::domain_error("Bargmann invariant is zero; phase undefined");
  }

  TriangleReport report;
  report.triple = {i, j, k};
  report.bargmann = bargmann(g, i, j, k);
  report.amplitude_factor = a_ij * a_jk * a_ki;

  const complex via_phases = (g(i, j) / a_ij) * (g(j, k) / a_jk) * (g(k, i) / a_ki);
  const complex via_bargmann = report.bargmann / std::abs(report.bargmann);
  if (std::abs(via_phases - via_bargmann) > kMatrixTol) {
    throw std::logic_error("defect and normalized Bargmann invariant disagree on triangle (" +
                           std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
  }
  report.defect = via_phases;
  report.pancharatnam = std::atan2(via_phases.imag(), via_phases.real());
  report.solid_angle = -2.0 * report.pancharatnam;
  report.hemisphere_branch = std::abs(via_phases + 1.0) <= kAntipodalTol;
  return report;
}

complex bargmann_bloch(const BlochVector& ni, const BlochVector& nj, const BlochVector& nk) {
  const double real = 1.0 + dot(ni, nj) + dot(nj, nk) + dot(nk, ni);
  return complex(real, triple_product(ni, nj, nk)) / 4.0;
}

double solid_angle(const BlochVector& ni, const BlochVector& nj, const BlochVector& nk) {
  if (1.0 + dot(ni, nj) <= kAntipodalTol || 1.0 + dot(nj, nk) <= kAntipodalTol ||
      1.0 + dot(nk, ni) <= kAntipodalTol) {
    throw std::domain_error("geodesic triangle degenerate: antipodal vertex pair");
  }
  const double bracket = 1.0 + dot(ni, nj) + dot(nj, nk) + dot(nk, ni);
  return -2.0 * std::atan2(triple_product(ni, nj, nk), bracket);
}

std::vector<TriangleReport> all_triangles(const GramMatrix& g, double zero_tol) {
  if (!(zero_tol > 0.0)) throw std::invalid_argument("zero_tol must be positive");
  const std::size_t n = g.size();
  std::vector<TriangleReport> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(g(i, j)) <= zero_tol) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (std::abs(g(j, k)) <= zero_tol || std::abs(g(k, i)) <= zero_tol) continue;
        out.push_back(triangle_report(g, i, j, k, zero_tol));
      }
    }
  }
  return out;
}

}  // namespace qpc
