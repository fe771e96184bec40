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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qpc {

using complex = std::complex<double>;

/// Construction tolerance on |c0|^2 + |c1|^2 - 1.
inline constexpr double kNormTol = 1e-12;
/// Looser tolerance for round trips through trigonometric parameterizations.
inline constexpr double kRoundTripTol = 1e-9;

/// A unit vector in C^2, standing for the ray it spans.
///
/// Two states that differ by a global phase are distinct values but the same
/// ray; use rays_equal() to compare rays.
class QubitState {
 public:
  /// Throws std::invalid_argument unless |c0|^2 + |c1|^2 = 1 within kNormTol.
  QubitState(complex c0, complex c1);

  /// Scales (c0, c1) to unit norm. Throws std::invalid_argument on a zero vector.
  static QubitState normalized(complex c0, complex c1);

  complex c0() const noexcept { return c0_; }
  complex c1() const noexcept { return c1_; }

  /// e^{i theta} times this state.
  QubitState rephased(double theta) const;

  friend bool operator==(const QubitState&, const QubitState&) = default;

 private:
  complex c0_;
  complex c1_;
};

/// <a, b>, conjugate-linear in the first argument: conj(a0) b0 + conj(a1) b1.
complex inner(const QubitState& a, const QubitState& b) noexcept;

/// Point on the unit sphere S^2.
class BlochVector {
 public:
  /// Throws std::invalid_argument unless the norm is 1 within kNormTol.
  BlochVector(double x, double y, double z);
  explicit BlochVector(const std::array<double, 3>& n) : BlochVector(n[0], n[1], n[2]) {}

  double x() const noexcept { return n_[0]; }
  double y() const noexcept { return n_[1]; }
  double z() const noexcept { return n_[2]; }
  const std::array<double, 3>& array() const noexcept { return n_; }
  double operator[](std::size_t a) const { return n_[a]; }

  friend bool operator==(const BlochVector&, const BlochVector&) = default;

 private:
  std::array<double, 3> n_;
};

/// Ordered list of states with optional pairwise-distinct labels.
class StateFamily {
 public:
  /// Throws std::invalid_argument on an empty list or bad labels.
  explicit StateFamily(std::vector<QubitState> states,
                       std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t size() const noexcept { return states_.size(); }
  const QubitState& operator[](std::size_t i) const { return states_[i]; }
  const std::vector<QubitState>& states() const noexcept { return states_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

 private:
  std::vector<QubitState> states_;
  std::optional<std::vector<std::string>> labels_;
};

/// n = (2 Re(conj(c0) c1), 2 Im(conj(c0) c1), |c0|^2 - |c1|^2).
BlochVector to_bloch(const QubitState& s) noexcept;

/// Representative with c0 = cos(theta/2) >= 0 and c1 = e^{i phi} sin(theta/2);
/// the south pole maps to (0, 1).
QubitState from_bloch(const BlochVector& n);

/// As above for a raw 3-vector. Throws std::invalid_argument("not on sphere")
/// unless the norm is 1 within kRoundTripTol.
QubitState from_bloch(const std::array<double, 3>& n);

using Rng = std::mt19937_64;

/// Haar-random state: two standard complex Gaussians, normalized.
QubitState random_state(Rng& rng);
QubitState random_state(std::uint64_t seed);
StateFamily random_family(std::size_t n, Rng& rng);
StateFamily random_family(std::size_t n, std::uint64_t seed);

/// 1 - |<a,b>|^2, evaluated as |a0 b1 - a1 b0|^2 to avoid cancellation.
double ray_distance(const QubitState& a, const QubitState& b) noexcept;

/// True iff 1 - |<a,b>|^2 <= tol. Throws std::invalid_argument if tol <= 0.
bool rays_equal(const QubitState& a, const QubitState& b, double tol);

}  // namespace qpc
