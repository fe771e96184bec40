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

#include "qpc/io.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_families.hpp"

namespace qpc::io {
namespace {

Json amp(double c0re, double c0im, double c1re, double c1im) {
  return Json{{"c0re", c0re}, {"c0im", c0im}, {"c1re", c1re}, {"c1im", c1im}};
}

Json family_doc(Json states) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["states"] = std::move(states);
  return doc;
}

TEST(FamilyJson, RoundTripIsLosslessAndByteStable) {
  const auto f = random_family(9, 123);
  const std::string first = dump(family_to_json(f));
  const auto loaded = family_from_json(Json::parse(first));
  EXPECT_TRUE(loaded.warnings.empty());
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(loaded.family[i], f[i]);
  EXPECT_EQ(dump(family_to_json(loaded.family)), first);
}

TEST(FamilyJson, LabelsSurvive) {
  const StateFamily f({testing::ket0(), testing::ket1()}, std::vector<std::string>{"up", "down"});
  const auto loaded = family_from_json(family_to_json(f));
  ASSERT_TRUE(loaded.family.labels().has_value());
  EXPECT_EQ(*loaded.family.labels(), (std::vector<std::string>{"up", "down"}));
}

TEST(FamilyJson, BlochRecords) {
  Json states = Json::array();
  states.push_back(Json{{"bloch", {0.0, 0.0, -1.0}}});
  states.push_back(Json{{"bloch", {0.0, 1.0, 0.0}}});
  const auto loaded = family_from_json(family_doc(states));
  EXPECT_EQ(loaded.family[0], QubitState(0.0, 1.0));
  EXPECT_TRUE(rays_equal(loaded.family[1], testing::ket_plus_i(), 1e-12));
}

TEST(FamilyJson, RenormalizationWindow) {
  // Norm off by 1e-7: accepted with a warning.
  const double s = 1.0 + 1e-7;
  auto loaded = family_from_json(family_doc(Json::array({amp(s, 0.0, 0.0, 0.0)})));
  ASSERT_EQ(loaded.warnings.size(), 1u);
  EXPECT_NE(loaded.warnings[0].find("state record 0"), std::string::npos);
  EXPECT_EQ(loaded.family[0], QubitState(1.0, 0.0));

  // Off by 1e-13: kept silently.
  loaded = family_from_json(family_doc(Json::array({amp(1.0 + 1e-13, 0.0, 0.0, 0.0)})));
  EXPECT_TRUE(loaded.warnings.empty());

  // Off by 1e-3: rejected.
  EXPECT_THROW(family_from_json(family_doc(Json::array({amp(1.001, 0.0, 0.0, 0.0)}))), ParseError);
}

TEST(FamilyJson, ErrorsNameTheRecord) {
  Json states = Json::array({amp(1.0, 0.0, 0.0, 0.0), Json{{"c0re", 1.0}}});
  try {
    family_from_json(family_doc(states));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("state record 1"), std::string::npos) << e.what();
  }
  states[1] = Json{{"bloch", {0.0, 0.0, 1.0}}, {"c0re", 1.0}};
  EXPECT_THROW(family_from_json(family_doc(states)), ParseError);
  states[1] = Json{{"bloch", {0.0, 0.0}}};
  EXPECT_THROW(family_from_json(family_doc(states)), ParseError);
}

TEST(FamilyJson, StructuralErrors) {
  EXPECT_THROW(family_from_json(Json::array()), ParseError);
  EXPECT_THROW(family_from_json(Json{{"states", Json::array()}}), ParseError);
  EXPECT_THROW(family_from_json(Json{{"version", 99}, {"states", Json::array()}}), ParseError);
  EXPECT_THROW(family_from_json(family_doc(Json::array())), ParseError);  // empty family
}

TEST(MatrixJson, GramRoundTrip) {
  const auto g = gram(random_family(4, 9)).matrix();
  const auto m = matrix_from_json(Json::parse(dump(gram_to_json(g))));
  EXPECT_EQ(m.kind, MatrixKind::gram);
  EXPECT_EQ(m.gram, g);
}

TEST(MatrixJson, GramIsKeptRawEvenWhenInvalid) {
  const auto m = matrix_from_json(gram_to_json(Eigen::MatrixXcd::Identity(3, 3) * 2.0));
  EXPECT_EQ(m.gram(0, 0), complex(2.0, 0.0));
}

TEST(MatrixJson, PhaseRoundTripKeepsSupport) {
  const StateFamily f({testing::ket0(), testing::ket1(), testing::ket_plus_i()});
  const auto u = phases(gram(f));
  const auto m = matrix_from_json(Json::parse(dump(phase_to_json(u))));
  ASSERT_EQ(m.kind, MatrixKind::phase);
  ASSERT_TRUE(m.phase.has_value());
  EXPECT_EQ(m.phase->support().edges(), u.support().edges());
  for (const auto& [i, j] : u.support().edges()) EXPECT_EQ(*m.phase->at(i, j), *u.at(i, j));
}

TEST(MatrixJson, ProbabilityValidated) {
  const auto p = probabilities(gram(testing::octant_family()));
  const auto m = matrix_from_json(probability_to_json(p));
  ASSERT_TRUE(m.probability.has_value());
  EXPECT_EQ(m.probability->matrix(), p.matrix());

  Json bad = probability_to_json(p);
  bad["entries"][1] = 1.5;
  EXPECT_THROW(matrix_from_json(bad), ParseError);
}

TEST(MatrixJson, StructuralErrors) {
  Json doc = gram_to_json(Eigen::MatrixXcd::Identity(2, 2));
  doc["kind"] = "density";
  EXPECT_THROW(matrix_from_json(doc), ParseError);
  doc = gram_to_json(Eigen::MatrixXcd::Identity(2, 2));
  doc["entries"].erase(0);
  EXPECT_THROW(matrix_from_json(doc), ParseError);
  doc = phase_to_json(phases(gram(testing::octant_family())));
  doc["entries"][0] = Json{{"re", 0.5}, {"im", 0.0}};
  EXPECT_THROW(matrix_from_json(doc), ParseError);
}

TEST(Analyze, OctantReport) {
  const Json doc = analyze(testing::octant_family());
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["support_edges"].size(), 3u);
  EXPECT_TRUE(doc["orthogonality_edges"].empty());
  ASSERT_EQ(doc["triangles"].size(), 1u);
  const Json& t = doc["triangles"][0];
  EXPECT_NEAR(t["pancharatnam"].get<double>(), std::numbers::pi / 4.0, 1e-12);
  EXPECT_NEAR(t["solid_angle"].get<double>(), -std::numbers::pi / 2.0, 1e-12);
}

TEST(Analyze, OrthogonalPairHasNoTriangles) {
  const Json doc = analyze(StateFamily({testing::ket0(), testing::ket1()}));
  EXPECT_EQ(doc["orthogonality_edges"], Json::parse("[[0, 1]]"));
  EXPECT_TRUE(doc["orthogonality_is_matching"].get<bool>());
  EXPECT_TRUE(doc["triangles"].empty());
}

TEST(Analyze, DuplicateRaysAreReported) {
  const auto s = testing::ket0();
  const Json doc = analyze(StateFamily({s, s.rephased(0.5), testing::ket1()}));
  EXPECT_FALSE(doc["orthogonality_is_matching"].get<bool>());
  EXPECT_EQ(doc["duplicate_rays"], Json::parse("[[0, 1]]"));
  EXPECT_TRUE(doc["orthogonality_is_matching_without_duplicates"].get<bool>());
  EXPECT_FALSE(doc["warnings"].empty());
}

TEST(Analyze, OutputIsDeterministic) {
  const auto f = random_family(6, 55);
  EXPECT_EQ(dump(analyze(f)), dump(analyze(f)));
}

TEST(Files, MissingPathIsIoError) {
  EXPECT_THROW(read_json("/nonexistent/qpc/file.json"), IoError);
  EXPECT_THROW(write_text("/nonexistent/qpc/file.json", "{}"), IoError);
}

}  // namespace
}  // namespace qpc::io
