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

#include "qpc/oracles.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "qpc/verify.hpp"
#include "test_families.hpp"

namespace qpc {
namespace {

TEST(PauliTraces, AllIdentitiesHold) {
  // Tr(sx sx) = 2, Tr(sx sy) = 0, Tr(sx sy sz) = 2i.
  const auto r = oracle_pauli_traces();
  EXPECT_EQ(r.cases_run, 36);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_discrepancy, 1e-15);
}

TEST(OracleBargmann, OctantHandValue) {
  const auto f = testing::octant_family();
  EXPECT_NEAR(std::abs(oracle_bargmann_direct(f, 0, 1, 2) - complex(0.25, 0.25)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(oracle_trace_product(f, 0, 1, 2) - complex(0.25, 0.25)), 0.0, 1e-15);
}

TEST(OracleBargmann, OrthogonalPairGivesZero) {
  const StateFamily f({testing::ket0(), testing::ket1(), testing::ket_plus()});
  EXPECT_NEAR(std::abs(oracle_bargmann_direct(f, 0, 1, 2)), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(oracle_trace_product(f, 0, 1, 2)), 0.0, 1e-16);
}

TEST(OracleBargmann, RejectsBadIndices) {
  const auto f = testing::octant_family();
  EXPECT_THROW(oracle_bargmann_direct(f, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(oracle_bargmann_direct(f, 0, 1, 5), std::invalid_argument);
}

TEST(OracleTracePair, ZAndXOverlapIsHalf) {
  const StateFamily f({testing::ket0(), testing::ket_plus(), testing::ket1()});
  EXPECT_NEAR(oracle_trace_pair(f, 0, 1), 0.5, 1e-15);
  EXPECT_NEAR(oracle_trace_pair(f, 0, 2), 0.0, 1e-15);
  EXPECT_NEAR(oracle_trace_pair(f, 1, 1), 1.0, 1e-15);
}

TEST(OracleBargmann, IndependentRoutesAgree) {
  Rng rng(3);
  for (int c = 0; c < 500; ++c) {
    const auto f = random_family(3, rng);
    const complex a = oracle_bargmann_direct(f, 0, 1, 2);
    const complex b = oracle_trace_product(f, 0, 1, 2);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13);
  }
}

TEST(Verification, AllPropertiesPassAndAreDeterministic) {
  const auto a = run_verification(7, 50);
  const auto b = run_verification(7, 50);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_GE(a.size(), 10u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_TRUE(a[k].pass) << format_report(a[k]);
    EXPECT_EQ(format_report(a[k]), format_report(b[k]));
  }
  EXPECT_THROW(run_verification(7, 0), std::invalid_argument);
}

TEST(Verification, ReportFormat) {
  OracleReport r{"demo", 3, 1.5e-13, 1e-12, true};
  EXPECT_EQ(format_report(r).rfind("demo ", 0), 0u);
  EXPECT_NE(format_report(r).find("cases=3 "), std::string::npos);
  EXPECT_NE(format_report(r).find("max_discrepancy=1.500e-13"), std::string::npos);
  EXPECT_NE(format_report(r).find("PASS"), std::string::npos);
  r.pass = false;
  EXPECT_NE(format_report(r).find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace qpc
