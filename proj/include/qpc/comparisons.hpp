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
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qpc/states.hpp"

namespace qpc {

/// Overlaps with modulus at or below this are treated as orthogonal.
inline constexpr double kDefaultZeroTol = 1e-10;
/// Structural tolerance for the matrix types below.
inline constexpr double kMatrixTol = 1e-12;

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on n vertices. Edges are stored as (i, j) with i < j.
class SupportGraph {
 public:
  explicit SupportGraph(std::size_t n);

  /// Throws std::invalid_argument on a self-loop or an out-of-range vertex.
  void add_edge(std::size_t i, std::size_t j);
  bool has_edge(std::size_t i, std::size_t j) const;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t degree(std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return components().size() <= 1; }

  SupportGraph complement() const;

 private:
  std::size_t n_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> matrix_;
};

/// Hermitian complex matrix with unit diagonal: g_ij = <psi_i, psi_j>.
class GramMatrix {
 public:
  /// Throws std::invalid_argument unless square, Hermitian and unit-diagonal within kMatrixTol.
  explicit GramMatrix(Eigen::MatrixXcd entries);

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  complex operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// Symmetric real matrix of transition probabilities p_ij = |g_ij|^2.
class ProbabilityMatrix {
 public:
  /// Throws std::invalid_argument unless square, symmetric, unit-diagonal, entries in [0, 1].
  explicit ProbabilityMatrix(Eigen::MatrixXd entries);

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

/// Reciprocal U(1)-valued comparison matrix, possibly partial.
///
/// Off-diagonal entry (i, j) exists iff {i, j} is a support edge; setting
/// u_ij also sets u_ji = conj(u_ij). The diagonal is always 1.
class PhaseMatrix {
 public:
  /// Empty support on n vertices.
  explicit PhaseMatrix(std::size_t n);

  /// Every off-diagonal entry present; checks reciprocity and unit modulus.
  static PhaseMatrix complete(const Eigen::MatrixXcd& entries);

  /// Entries read from `entries` on the edges of `support` only. Checks
  /// reciprocity and unit modulus on those edges.
  static PhaseMatrix from_dense(const Eigen::MatrixXcd& entries, const SupportGraph& support);

  /// Throws std::invalid_argument if i == j, out of range, or |u| != 1 within kMatrixTol.
  void set(std::size_t i, std::size_t j, complex u);

  std::optional<complex> at(std::size_t i, std::size_t j) const;
  bool has(std::size_t i, std::size_t j) const { return i == j || support_.has_edge(i, j); }

  std::size_t size() const noexcept { return n_; }
  const SupportGraph& support() const noexcept { return support_; }
  bool is_complete() const noexcept { return support_.edge_count() == n_ * (n_ - 1) / 2; }

  /// Argument of u_ij in (-pi, pi]; empty when absent.
  std::optional<double> angle(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_;
  std::vector<std::optional<complex>> entries_;
  SupportGraph support_;
};

/// Entry (i, j) = inner(f[i], f[j]).
GramMatrix gram(const StateFamily& f);

ProbabilityMatrix probabilities(const GramMatrix& g);

/// u_ij = g_ij / |g_ij| where |g_ij| > zero_tol; absent otherwise.
PhaseMatrix phases(const GramMatrix& g, double zero_tol = kDefaultZeroTol);

/// Edge {i, j} iff |g_ij| <= zero_tol.
SupportGraph orthogonality_graph(const GramMatrix& g, double zero_tol = kDefaultZeroTol);

/// True iff every vertex has degree at most 1.
bool check_matching(const SupportGraph& og);

}  // namespace qpc
