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

#include "qpc/states.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace qpc {

QubitState::QubitState(complex c0, complex c1) : c0_(c0), c1_(c1) {
  const double norm2 = std::norm(c0) + std::norm(c1);
  if (!(std::abs(norm2 - 1.0) <= kNormTol)) {
    throw std::invalid_argument("qubit state not normalized: |c0|^2 + |c1|^2 = " +
                                std::to_string(norm2));
  }
}

QubitState QubitState::normalized(complex c0, complex c1) {
  const double norm = std::sqrt(std::norm(c0) + std::norm(c1));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  return QubitState(c0 / norm, c1 / norm);
}

QubitState QubitState::rephased(double theta) const {
  const complex phase = std::polar(1.0, theta);
  return QubitState(phase * c0_, phase * c1_);
}

complex inner(const QubitState& a, const QubitState& b) noexcept {
  return std::conj(a.c0()) * b.c0() + std::conj(a.c1()) * b.c1();
}

BlochVector::BlochVector(double x, double y, double z) : n_{x, y, z} {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(std::abs(norm - 1.0) <= kNormTol)) {
    throw std::invalid_argument("Bloch vector not on sphere: |n| = " + std::to_string(norm));
  }
}

StateFamily::StateFamily(std::vector<QubitState> states,
                         std::optional<std::vector<std::string>> labels)
    : states_(std::move(states)), labels_(std::move(labels)) {
  if (states_.empty()) {
    throw std::invalid_argument("state family must contain at least one state");
  }
  if (labels_) {
    if (labels_->size() != states_.size()) {
      throw std::invalid_argument("label count does not match state count");
    }
    std::set<std::string> seen;
    for (const auto& label : *labels_) {
      if (!seen.insert(label).second) {
        throw std::invalid_argument("duplicate label '" + label + "'");
      }
    }
  }
}

BlochVector to_bloch(const QubitState& s) noexcept {
  // |n| = |c0|^2 + |c1|^2 identically; dividing by it absorbs the kNormTol slack.
  const double norm2 = std::norm(s.c0()) + std::norm(s.c1());
  const complex cross = std::conj(s.c0()) * s.c1();
  const double nx = 2.0 * cross.real() / norm2;
  const double ny = 2.0 * cross.imag() / norm2;
  const double nz = (std::norm(s.c0()) - std::norm(s.c1())) / norm2;
  return BlochVector(nx, ny, nz);
}

QubitState from_bloch(const BlochVector& n) { return from_bloch(n.array()); }

QubitState from_bloch(const std::array<double, 3>& n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(std::abs(norm - 1.0) <= kRoundTripTol)) {
    throw std::invalid_argument("not on sphere: |n| = " + std::to_string(norm));
  }
  const double x = n[0] / norm;
  const double y = n[1] / norm;
  const double z = n[2] / norm;
  const double rho = std::hypot(x, y);
  if (rho == 0.0) {
    return z > 0.0 ? QubitState(1.0, 0.0) : QubitState(0.0, 1.0);
  }
  const double theta = std::atan2(rho, z);
  const double phi = std::atan2(y, x);
  return QubitState::normalized(std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi));
}

QubitState random_state(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const double a = gauss(rng);
    const double b = gauss(rng);
    const double c = gauss(rng);
    const double d = gauss(rng);
    if (a * a + b * b + c * c + d * d > 1e-300) {
      return QubitState::normalized(complex(a, b), complex(c, d));
    }
  }
}

QubitState random_state(std::uint64_t seed) {
  Rng rng(seed);
  return random_state(rng);
}

StateFamily random_family(std::size_t n, Rng& rng) {
  std::vector<QubitState> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) states.push_back(random_state(rng));
  return StateFamily(std::move(states));
}

StateFamily random_family(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_family(n, rng);
}

double ray_distance(const QubitState& a, const QubitState& b) noexcept {
  return std::norm(a.c0() * b.c1() - a.c1() * b.c0());
}

bool rays_equal(const QubitState& a, const QubitState& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("rays_equal: tol must be positive");
  return ray_distance(a, b) <= tol;
}

}  // namespace qpc
