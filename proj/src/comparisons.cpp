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

#include "qpc/comparisons.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qpc {

namespace {

void check_zero_tol(double zero_tol) {
  if (!(zero_tol > 0.0)) throw std::invalid_argument("zero_tol must be positive");
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

SupportGraph::SupportGraph(std::size_t n) : n_(n), adjacency_(n), matrix_(n * n, false) {}

void SupportGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw std::invalid_argument("edge " + pair_name(i, j) + " out of range");
  if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
  if (matrix_[i * n_ + j]) return;
  matrix_[i * n_ + j] = matrix_[j * n_ + i] = true;
  adjacency_[i].push_back(j);
  adjacency_[j].push_back(i);
  std::sort(adjacency_[i].begin(), adjacency_[i].end());
  std::sort(adjacency_[j].begin(), adjacency_[j].end());
  ++edge_count_;
}

bool SupportGraph::has_edge(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return false;
  return matrix_[i * n_ + j];
}

std::size_t SupportGraph::degree(std::size_t v) const { return adjacency_.at(v).size(); }

std::vector<Edge> SupportGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> SupportGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n_, false);
  for (std::size_t root = 0; root < n_; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component{root};
    seen[root] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (std::size_t w : adjacency_[component[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

SupportGraph SupportGraph::complement() const {
  SupportGraph out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!has_edge(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

GramMatrix::GramMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("Gram matrix must be square and non-empty");
  }
  const auto n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(entries_(i, i) - 1.0) > kMatrixTol) {
      throw std::invalid_argument("Gram matrix diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(entries_(j, i) - std::conj(entries_(i, j))) > kMatrixTol) {
        throw std::invalid_argument("Gram matrix not Hermitian at " +
                                    pair_name(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      }
    }
  }
}

ProbabilityMatrix::ProbabilityMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("probability matrix must be square and non-empty");
  }
  const auto n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(entries_(i, i) - 1.0) > kMatrixTol) {
      throw std::invalid_argument("probability matrix diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const double p = entries_(i, j);
      if (!(p >= -kMatrixTol && p <= 1.0 + kMatrixTol)) {
        throw std::invalid_argument("probability outside [0, 1] at " +
                                    pair_name(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      }
      if (std::abs(p - entries_(j, i)) > kMatrixTol) {
        throw std::invalid_argument("probability matrix not symmetric at " +
                                    pair_name(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      }
    }
  }
}

PhaseMatrix::PhaseMatrix(std::size_t n) : n_(n), entries_(n * n), support_(n) {
  for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = complex(1.0, 0.0);
}

PhaseMatrix PhaseMatrix::complete(const Eigen::MatrixXcd& entries) {
  SupportGraph all(static_cast<std::size_t>(entries.rows()));
  for (std::size_t i = 0; i < all.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < all.vertex_count(); ++j) all.add_edge(i, j);
  }
  return from_dense(entries, all);
}

PhaseMatrix PhaseMatrix::from_dense(const Eigen::MatrixXcd& entries, const SupportGraph& support) {
  if (entries.rows() != entries.cols()) throw std::invalid_argument("phase matrix must be square");
  const auto n = static_cast<std::size_t>(entries.rows());
  if (support.vertex_count() != n) {
    throw std::invalid_argument("support graph size does not match phase matrix size");
  }
  PhaseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(entries(i, i) - 1.0) > kMatrixTol) {
      throw std::invalid_argument("phase matrix diagonal entry " + std::to_string(i) + " is not 1");
    }
  }
  for (const auto& [i, j] : support.edges()) {
    if (std::abs(entries(j, i) - std::conj(entries(i, j))) > kMatrixTol) {
      throw std::invalid_argument("phase matrix not reciprocal at " + pair_name(i, j));
    }
    out.set(i, j, entries(i, j));
  }
  return out;
}

void PhaseMatrix::set(std::size_t i, std::size_t j, complex u) {
  if (i >= n_ || j >= n_) throw std::invalid_argument("phase entry " + pair_name(i, j) + " out of range");
  if (i == j) throw std::invalid_argument("diagonal phase entries are fixed to 1");
  if (!(std::abs(std::abs(u) - 1.0) <= kMatrixTol)) {
    throw std::invalid_argument("phase entry " + pair_name(i, j) + " is not unit modulus");
  }
  entries_[i * n_ + j] = u;
  entries_[j * n_ + i] = std::conj(u);
  support_.add_edge(i, j);
}

std::optional<complex> PhaseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("phase entry " + pair_name(i, j) + " out of range");
  return entries_[i * n_ + j];
}

std::optional<double> PhaseMatrix::angle(std::size_t i, std::size_t j) const {
  const auto u = at(i, j);
  if (!u) return std::nullopt;
  return std::arg(*u);
}

GramMatrix gram(const StateFamily& f) {
  const auto n = static_cast<Eigen::Index>(f.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = inner(f[i], f[i]);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      g(i, j) = inner(f[i], f[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return GramMatrix(std::move(g));
}

ProbabilityMatrix probabilities(const GramMatrix& g) {
  Eigen::MatrixXd p = g.matrix().cwiseAbs2();
  // |g_ij|^2 and |g_ji|^2 agree to rounding; copy to make symmetry exact.
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < p.cols(); ++j) p(j, i) = p(i, j);
  }
  return ProbabilityMatrix(std::move(p));
}

PhaseMatrix phases(const GramMatrix& g, double zero_tol) {
  check_zero_tol(zero_tol);
  PhaseMatrix u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const double modulus = std::abs(g(i, j));
      if (modulus > zero_tol) u.set(i, j, g(i, j) / modulus);
    }
  }
  return u;
}

SupportGraph orthogonality_graph(const GramMatrix& g, double zero_tol) {
  check_zero_tol(zero_tol);
  SupportGraph og(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (std::abs(g(i, j)) <= zero_tol) og.add_edge(i, j);
    }
  }
  return og;
}

bool check_matching(const SupportGraph& og) {
  for (std::size_t v = 0; v < og.vertex_count(); ++v) {
    if (og.degree(v) > 1) return false;
  }
  return true;
}

}  // namespace qpc
