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

#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_families.hpp"

namespace qpc {
namespace {

using testing::kInvSqrt2;

// rho = |psi><psi| as an explicit 2x2 matrix, n_a = Tr(rho sigma_a).
std::array<double, 3> bloch_by_trace(const QubitState& s) {
  const complex r00 = s.c0() * std::conj(s.c0());
  const complex r01 = s.c0() * std::conj(s.c1());
  const complex r10 = s.c1() * std::conj(s.c0());
  const complex r11 = s.c1() * std::conj(s.c1());
  const complex I(0.0, 1.0);
  // sigma_x = [[0,1],[1,0]], sigma_y = [[0,-i],[i,0]], sigma_z = diag(1,-1).
  const complex tx = r01 + r10;
  const complex ty = r01 * I + r10 * (-I);
  const complex tz = r00 - r11;
  return {tx.real(), ty.real(), tz.real()};
}

TEST(QubitState, RejectsUnnormalized) {
  EXPECT_THROW(QubitState(1.0, 1.0), std::invalid_argument);
  EXPECT_NO_THROW(QubitState(1.0, 1e-7));
  EXPECT_THROW(QubitState::normalized(0.0, 0.0), std::invalid_argument);
  const auto s = QubitState::normalized(3.0, complex(0.0, 4.0));
  EXPECT_NEAR(std::norm(s.c0()) + std::norm(s.c1()), 1.0, 1e-15);
}

TEST(QubitState, InnerProductConjugatesFirstArgument) {
  const QubitState a(complex(0.0, 1.0), 0.0);
  const QubitState b(1.0, 0.0);
  EXPECT_EQ(inner(a, b), complex(0.0, -1.0));
  EXPECT_EQ(inner(b, a), complex(0.0, 1.0));
}

TEST(StateFamily, Invariants) {
  EXPECT_THROW(StateFamily({}), std::invalid_argument);
  EXPECT_THROW(StateFamily({testing::ket0()}, std::vector<std::string>{"a", "b"}), std::invalid_argument);
  EXPECT_THROW(StateFamily({testing::ket0(), testing::ket1()}, std::vector<std::string>{"a", "a"}),
               std::invalid_argument);
  EXPECT_NO_THROW(StateFamily({testing::ket0(), testing::ket1()}, std::vector<std::string>{"a", "b"}));
}

TEST(ToBloch, BasisStates) {
  const auto north = to_bloch(testing::ket0());
  EXPECT_EQ(north.array(), (std::array<double, 3>{0.0, 0.0, 1.0}));
  const auto plus = to_bloch(testing::ket_plus());
  EXPECT_NEAR(plus.x(), 1.0, 1e-15);
  EXPECT_NEAR(plus.y(), 0.0, 1e-15);
  EXPECT_NEAR(plus.z(), 0.0, 1e-15);
}

TEST(ToBloch, PlusIMatchesTraceOracle) {
  const auto s = testing::ket_plus_i();
  const auto oracle = bloch_by_trace(s);
  // Frozen from the trace oracle: (0, 1, 0).
  EXPECT_NEAR(oracle[0], 0.0, 1e-15);
  EXPECT_NEAR(oracle[1], 1.0, 1e-15);
  EXPECT_NEAR(oracle[2], 0.0, 1e-15);
  const auto n = to_bloch(s);
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(n[a], oracle[a], 1e-15);
}

TEST(ToBloch, AgreesWithTraceOracleOnRandomStates) {
  Rng rng(11);
  for (int c = 0; c < 200; ++c) {
    const auto s = random_state(rng);
    const auto n = to_bloch(s);
    const auto oracle = bloch_by_trace(s);
    for (int a = 0; a < 3; ++a) EXPECT_NEAR(n[a], oracle[a], 1e-14);
  }
}

TEST(ToBloch, RephasingInvariant) {
  Rng rng(3);
  for (int c = 0; c < 200; ++c) {
    const auto s = random_state(rng);
    const double theta = std::uniform_real_distribution<double>(-10.0, 10.0)(rng);
    const auto a = to_bloch(s);
    const auto b = to_bloch(s.rephased(theta));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(a[k], b[k], 1e-15);
  }
}

TEST(ToBloch, ReconstructedProjectorIsPure) {
  Rng rng(5);
  for (int c = 0; c < 200; ++c) {
    const auto n = to_bloch(random_state(rng));
    // rho = (I + n.sigma) / 2
    const complex r00 = 0.5 * (1.0 + n.z());
    const complex r11 = 0.5 * (1.0 - n.z());
    const complex r01 = 0.5 * complex(n.x(), -n.y());
    const complex r10 = std::conj(r01);
    const complex trace = r00 + r11;
    const complex trace_sq = r00 * r00 + r01 * r10 + r10 * r01 + r11 * r11;
    EXPECT_NEAR(trace.real(), 1.0, 1e-12);
    EXPECT_NEAR(trace_sq.real(), 1.0, 1e-12);
    EXPECT_NEAR(trace_sq.imag(), 0.0, 1e-12);
  }
}

TEST(FromBloch, GaugeConvention) {
  EXPECT_EQ(from_bloch(std::array<double, 3>{0.0, 0.0, 1.0}), QubitState(1.0, 0.0));
  EXPECT_EQ(from_bloch(std::array<double, 3>{0.0, 0.0, -1.0}), QubitState(0.0, 1.0));
  const auto plus = from_bloch(std::array<double, 3>{1.0, 0.0, 0.0});
  EXPECT_NEAR(std::abs(plus.c0() - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(plus.c1() - kInvSqrt2), 0.0, 1e-15);
}

TEST(FromBloch, RejectsPointsOffSphere) {
  EXPECT_THROW(from_bloch(std::array<double, 3>{0.0, 0.0, 1.1}), std::invalid_argument);
  EXPECT_THROW(from_bloch(std::array<double, 3>{0.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_NO_THROW(from_bloch(std::array<double, 3>{0.0, 0.0, 1.0 + 1e-10}));
}

TEST(FromBloch, RoundTrips) {
  Rng rng(17);
  for (int c = 0; c < 500; ++c) {
    const auto s = random_state(rng);
    const auto n = to_bloch(s);
    const auto back = from_bloch(n);
    EXPECT_GE(back.c0().real(), 0.0);
    EXPECT_EQ(back.c0().imag(), 0.0);
    EXPECT_TRUE(rays_equal(back, s, kRoundTripTol));
    const auto n2 = to_bloch(back);
    for (int a = 0; a < 3; ++a) EXPECT_NEAR(n2[a], n[a], kRoundTripTol);
  }
}

TEST(RandomState, NormalizedAndDeterministic) {
  const auto a = random_state(42);
  const auto b = random_state(42);
  EXPECT_EQ(a, b);
  EXPECT_NEAR(std::norm(a.c0()) + std::norm(a.c1()), 1.0, 1e-12);
  EXPECT_NE(random_state(42), random_state(43));
}

TEST(RandomState, HaarMeanOfNzVanishes) {
  // The Haar measure pushes forward to the uniform measure on S^2, so each
  // Bloch coordinate has mean 0 and variance 1/3.
  Rng rng(2024);
  double sum = 0.0;
  const int samples = 100000;
  for (int c = 0; c < samples; ++c) sum += to_bloch(random_state(rng)).z();
  EXPECT_NEAR(sum / samples, 0.0, 0.02);
}

TEST(RaysEqual, Cases) {
  const auto a = random_state(9);
  EXPECT_TRUE(rays_equal(a, a.rephased(std::numbers::pi / 7.0), 1e-12));
  EXPECT_FALSE(rays_equal(testing::ket0(), testing::ket1(), 1e-12));
  EXPECT_THROW(rays_equal(a, a, 0.0), std::invalid_argument);
  EXPECT_EQ(rays_equal(a, testing::ket1(), 1e-3), rays_equal(testing::ket1(), a, 1e-3));
}

TEST(RaysEqual, TinyAngleFallsInsideTolerance) {
  // 1 - |<a,b>|^2 = sin^2(1e-9) = 1e-18 (to 1 part in 1e-18), below tol = 1e-12.
  const double eps = 1e-9;
  const QubitState a(1.0, 0.0);
  const QubitState b(std::cos(eps), std::sin(eps));
  EXPECT_NEAR(ray_distance(a, b), 1e-18, 1e-30);
  EXPECT_TRUE(rays_equal(a, b, 1e-12));
}

}  // namespace
}  // namespace qpc
