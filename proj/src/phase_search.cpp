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

#include "phase_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace qpc::detail {

namespace {

// Parameter layout: state 0 carries only its polar angle; every other state
// carries (theta, phi, chi) for e^{i chi} (cos(theta/2), e^{i phi} sin(theta/2)).
std::size_t offset(std::size_t state) { return state == 0 ? 0 : 1 + 3 * (state - 1); }

struct Angles {
  double theta;
  double phi;
  double chi;
};

Angles angles_of(const Eigen::VectorXd& x, std::size_t state) {
  if (state == 0) return {x[0], 0.0, 0.0};
  const std::size_t o = offset(state);
  return {x[o], x[o + 1], x[o + 2]};
}

Eigen::Vector2cd amplitudes(const Angles& a) {
  const complex gauge = std::polar(1.0, a.chi);
  return {gauge * std::cos(a.theta / 2.0), gauge * std::polar(std::sin(a.theta / 2.0), a.phi)};
}

// Partial derivatives of the amplitudes with respect to (theta, phi, chi).
std::array<Eigen::Vector2cd, 3> amplitude_jacobian(const Angles& a) {
  const complex gauge = std::polar(1.0, a.chi);
  const complex azimuth = std::polar(1.0, a.phi);
  const double c = std::cos(a.theta / 2.0);
  const double s = std::sin(a.theta / 2.0);
  const complex i_unit(0.0, 1.0);
  Eigen::Vector2cd d_theta(gauge * (-0.5 * s), gauge * azimuth * (0.5 * c));
  Eigen::Vector2cd d_phi(0.0, gauge * i_unit * azimuth * s);
  Eigen::Vector2cd d_chi = i_unit * amplitudes(a);
  return {d_theta, d_phi, d_chi};
}

struct Problem {
  const PhaseMatrix& target;
  std::vector<Edge> edges;
  std::size_t n_states;
  std::size_t n_params;
  double soft_floor;

  std::vector<Eigen::Vector2cd> states(const Eigen::VectorXd& x) const {
    std::vector<Eigen::Vector2cd> out(n_states);
    for (std::size_t s = 0; s < n_states; ++s) out[s] = amplitudes(angles_of(x, s));
    return out;
  }

  complex smoothed(complex g) const { return g / std::max(std::abs(g), soft_floor); }

  // d(smoothed)/dt given dg/dt.
  complex smoothed_derivative(complex g, complex dg) const {
    const double modulus = std::abs(g);
    if (modulus <= soft_floor) return dg / soft_floor;
    return dg / modulus - g * (std::conj(g) * dg).real() / (modulus * modulus * modulus);
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& x) const {
    const auto psi = states(x);
    Eigen::VectorXd r(2 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      const complex diff = smoothed(psi[i].dot(psi[j])) - *target.at(i, j);
      r[2 * e] = diff.real();
      r[2 * e + 1] = diff.imag();
    }
    return r;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    const auto psi = states(x);
    std::vector<std::array<Eigen::Vector2cd, 3>> dpsi(n_states);
    for (std::size_t s = 0; s < n_states; ++s) dpsi[s] = amplitude_jacobian(angles_of(x, s));

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2 * edges.size(), n_params);
    auto fill = [&](std::size_t row, std::size_t state, int which, complex g, complex dg) {
      if (state == 0 && which != 0) return;
      const std::size_t col = offset(state) + static_cast<std::size_t>(which);
      const complex dh = smoothed_derivative(g, dg);
      jac(2 * row, col) += dh.real();
      jac(2 * row + 1, col) += dh.imag();
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      // Eigen's dot() conjugates its left operand: a.dot(b) = a^H b.
      const complex g = psi[i].dot(psi[j]);
      for (int w = 0; w < 3; ++w) {
        fill(e, i, w, g, dpsi[i][w].dot(psi[j]));
        fill(e, j, w, g, psi[i].dot(dpsi[j][w]));
      }
    }
    return jac;
  }

  double max_edge_residual(const Eigen::VectorXd& r) const {
    double worst = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      worst = std::max(worst, std::hypot(r[2 * e], r[2 * e + 1]));
    }
    return worst;
  }
};

}  // namespace

DescentOutcome descend_phases(const PhaseMatrix& u, std::uint64_t seed, int max_iters,
                              double soft_floor) {
  const std::size_t n = u.size();
  Problem problem{u, u.support().edges(), n, 3 * n - 2, soft_floor};

  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  Eigen::VectorXd x(problem.n_params);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t o = offset(s);
    x[o] = std::acos(1.0 - 2.0 * unit(rng));
    if (s > 0) {
      x[o + 1] = two_pi * unit(rng);
      x[o + 2] = two_pi * unit(rng);
    }
  }

  Eigen::VectorXd r = problem.residual(x);
  double cost = 0.5 * r.squaredNorm();
  double mu = -1.0;
  double nu = 2.0;
  int it = 0;
  for (; it < max_iters; ++it) {
    if (problem.max_edge_residual(r) <= 1e-13) break;
    const Eigen::MatrixXd jac = problem.jacobian(x);
    const Eigen::MatrixXd normal = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    if (grad.lpNorm<Eigen::Infinity>() <= 1e-16) break;
    if (mu < 0.0) mu = 1e-3 * std::max(normal.diagonal().maxCoeff(), 1e-12);

    const Eigen::MatrixXd damped =
        normal + mu * Eigen::MatrixXd::Identity(problem.n_params, problem.n_params);
    const Eigen::VectorXd step = damped.ldlt().solve(-grad);
    if (step.norm() <= 1e-15 * (x.norm() + 1e-15)) break;

    const Eigen::VectorXd x_new = x + step;
    const Eigen::VectorXd r_new = problem.residual(x_new);
    const double cost_new = 0.5 * r_new.squaredNorm();
    const double predicted = 0.5 * step.dot(mu * step - grad);
    const double gain = predicted > 0.0 ? (cost - cost_new) / predicted : -1.0;
    if (gain > 0.0) {
      x = x_new;
      r = r_new;
      cost = cost_new;
      mu *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * gain - 1.0, 3));
      nu = 2.0;
    } else {
      mu *= nu;
      nu *= 2.0;
      if (!std::isfinite(mu) || mu > 1e20) break;
    }
  }

  DescentOutcome out;
  out.iterations = it;
  out.max_edge_residual = problem.max_edge_residual(r);
  for (const auto& v : problem.states(x)) out.states.push_back(QubitState::normalized(v[0], v[1]));
  out.min_edge_overlap = 1.0;
  for (const auto& [i, j] : problem.edges) {
    out.min_edge_overlap = std::min(out.min_edge_overlap, std::abs(inner(out.states[i], out.states[j])));
  }
  return out;
}

}  // namespace qpc::detail
