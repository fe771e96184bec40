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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qpc/verify.hpp"
#include "test_families.hpp"

namespace qpc {
namespace {

using testing::kInvSqrt2;

TEST(Gram, OrthonormalBasisGivesIdentity) {
  const auto g = gram(StateFamily({testing::ket0(), testing::ket1()}));
  EXPECT_TRUE(g.matrix().isApprox(Eigen::MatrixXcd::Identity(2, 2)));
}

TEST(Gram, RepeatedStateGivesAllOnes) {
  const auto s = random_state(4);
  const auto g = gram(StateFamily({s, s}));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(g(i, j) - 1.0), 0.0, 1e-15);
  }
}

TEST(Gram, OctantFamilyHandValues) {
  // <0|+> = 1/sqrt2, <+|+i> = (1 + i)/2, <+i|0> = 1/sqrt2.
  const auto g = gram(testing::octant_family());
  EXPECT_NEAR(std::abs(g(0, 1) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g(1, 2) - complex(0.5, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g(2, 0) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_EQ(g(2, 1), std::conj(g(1, 2)));
}

TEST(GramMatrix, RejectsBrokenInvariants) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1) = 0.3;
  EXPECT_THROW(GramMatrix{m}, std::invalid_argument);
  m(1, 0) = 0.3;
  EXPECT_NO_THROW(GramMatrix{m});
  m(0, 0) = 0.9;
  EXPECT_THROW(GramMatrix{m}, std::invalid_argument);
  EXPECT_THROW(GramMatrix{Eigen::MatrixXcd(2, 3)}, std::invalid_argument);
}

TEST(Probabilities, IdentityAndModulusSquared) {
  const auto p_id = probabilities(gram(StateFamily({testing::ket0(), testing::ket1()})));
  EXPECT_TRUE(p_id.matrix().isApprox(Eigen::MatrixXd::Identity(2, 2)));
  const auto p = probabilities(gram(testing::octant_family()));
  EXPECT_NEAR(p(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(p(1, 2), 0.5, 1e-15);
}

TEST(Probabilities, MatchesBlochFormula) {
  Rng rng(8);
  for (int c = 0; c < 100; ++c) {
    const auto f = random_family(6, rng);
    const auto p = probabilities(gram(f));
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        const auto ni = to_bloch(f[i]).array();
        const auto nj = to_bloch(f[j]).array();
        const double dot = ni[0] * nj[0] + ni[1] * nj[1] + ni[2] * nj[2];
        EXPECT_NEAR(p(i, j), 0.5 * (1.0 + dot), 1e-12);
        EXPECT_EQ(p(i, j), p(j, i));
      }
    }
  }
}

TEST(Phases, AllOnesGramIsCompleteAndTrivial) {
  const auto s = random_state(1);
  const auto u = phases(gram(StateFamily({s, s.rephased(0.0), s})));
  EXPECT_TRUE(u.is_complete());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(*u.at(i, j) - 1.0), 0.0, 1e-15);
  }
}

TEST(Phases, OrthogonalPairHasNoEntry) {
  const auto u = phases(gram(StateFamily({testing::ket0(), testing::ket1()})));
  EXPECT_EQ(u.support().edge_count(), 0u);
  EXPECT_FALSE(u.at(0, 1).has_value());
  EXPECT_EQ(*u.at(0, 0), complex(1.0, 0.0));
}

TEST(Phases, OctantEntryIsEighthTurn) {
  // (1 + i)/2 divided by its modulus 1/sqrt2.
  const auto u = phases(gram(testing::octant_family()));
  EXPECT_NEAR(std::abs(*u.at(1, 2) - std::polar(1.0, std::numbers::pi / 4.0)), 0.0, 1e-15);
  EXPECT_NEAR(*u.angle(1, 2), std::numbers::pi / 4.0, 1e-15);
}

TEST(Phases, Reciprocity) {
  Rng rng(21);
  for (int c = 0; c < 100; ++c) {
    const auto u = phases(gram(random_family_with_orthogonal_pairs(6, rng)));
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < u.size(); ++j) {
        ASSERT_EQ(u.at(i, j).has_value(), u.at(j, i).has_value());
        if (u.at(i, j)) EXPECT_NEAR(std::abs(*u.at(i, j) * *u.at(j, i) - 1.0), 0.0, 1e-12);
      }
    }
  }
}

TEST(Phases, RephasingCovariance) {
  Rng rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int c = 0; c < 50; ++c) {
    const auto f = random_family(5, rng);
    std::vector<double> theta;
    std::vector<QubitState> moved;
    for (const auto& s : f.states()) {
      theta.push_back(angle(rng));
      moved.push_back(s.rephased(theta.back()));
    }
    const auto g1 = gram(f);
    const auto g2 = gram(StateFamily(moved));
    const auto p1 = probabilities(g1);
    const auto p2 = probabilities(g2);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        const complex expected = std::polar(1.0, -theta[i]) * std::polar(1.0, theta[j]) * g1(i, j);
        EXPECT_NEAR(std::abs(g2(i, j) - expected), 0.0, 1e-14);
        EXPECT_NEAR(p1(i, j), p2(i, j), 1e-15);
      }
    }
  }
}

TEST(PhaseMatrix, Validation) {
  PhaseMatrix u(3);
  EXPECT_THROW(u.set(0, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(u.set(0, 3, 1.0), std::invalid_argument);
  EXPECT_THROW(u.set(0, 1, 0.5), std::invalid_argument);
  u.set(0, 1, complex(0.0, 1.0));
  EXPECT_EQ(*u.at(1, 0), complex(0.0, -1.0));
  EXPECT_TRUE(u.support().has_edge(1, 0));

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(2, 2);
  m(0, 1) = complex(0.0, 1.0);
  EXPECT_THROW(PhaseMatrix::complete(m), std::invalid_argument);  // m(1,0) should be -i
  m(1, 0) = complex(0.0, -1.0);
  EXPECT_NO_THROW(PhaseMatrix::complete(m));
}

TEST(OrthogonalityGraph, Examples) {
  const auto og_id = orthogonality_graph(gram(StateFamily({testing::ket0(), testing::ket1()})), 1e-10);
  EXPECT_EQ(og_id.edges(), (std::vector<Edge>{{0, 1}}));
  const auto s = random_state(2);
  EXPECT_EQ(orthogonality_graph(gram(StateFamily({s, s})), 1e-10).edge_count(), 0u);
}

TEST(OrthogonalityGraph, TwoBasesFormPerfectMatching) {
  // |<0|1>| = |<+|->| = 0, every other overlap 1/sqrt2.
  const StateFamily f({testing::ket0(), testing::ket1(), testing::ket_plus(), testing::ket_minus()});
  const auto og = orthogonality_graph(gram(f), 1e-10);
  EXPECT_EQ(og.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(check_matching(og));
  const auto u = phases(gram(f));
  EXPECT_EQ(u.support().edges(), og.complement().edges());
}

TEST(CheckMatching, Examples) {
  EXPECT_TRUE(check_matching(SupportGraph(4)));
  SupportGraph single(2);
  single.add_edge(0, 1);
  EXPECT_TRUE(check_matching(single));
  SupportGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_FALSE(check_matching(path));
}

TEST(CheckMatching, HoldsForDistinctRays) {
  Rng rng(77);
  for (int c = 0; c < 300; ++c) {
    const auto f = random_family_with_orthogonal_pairs(2 + c % 7, rng);
    EXPECT_TRUE(check_matching(orthogonality_graph(gram(f), 1e-9)));
  }
}

TEST(CheckMatching, FailsWithDuplicateRays) {
  // psi, e^{i t} psi and psi-perp: the perp vertex has degree 2.
  const auto s = random_state(6);
  const QubitState perp(-std::conj(s.c1()), std::conj(s.c0()));
  const auto og = orthogonality_graph(gram(StateFamily({s, s.rephased(1.0), perp})), 1e-9);
  EXPECT_FALSE(check_matching(og));
}

TEST(SupportGraph, ComponentsAndErrors) {
  SupportGraph g(5);
  g.add_edge(3, 1);
  g.add_edge(0, 4);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 5), std::invalid_argument);
  const auto comps = g.components();
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(comps[1], (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(comps[2], (std::vector<std::size_t>{2}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 4}, {1, 3}}));
}

}  // namespace
}  // namespace qpc
