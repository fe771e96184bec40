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
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qpc/invariants.hpp"

namespace qpc::io {

namespace {

double round_sig(double x, int digits) {
  if (digits >= 17 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

Json complex_json(complex z, int digits) {
  return Json{{"re", round_sig(z.real(), digits)}, {"im", round_sig(z.imag(), digits)}};
}

double number(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number()) throw ParseError(where + ": field '" + key + "' is not a number");
  return v.get<double>();
}

complex complex_from(const Json& j, const std::string& where) {
  return {number(j, "re", where), number(j, "im", where)};
}

std::size_t index_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(where + ": vertex index must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

void check_version(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("version") || !doc.at("version").is_number_integer()) {
    throw ParseError("missing integer field 'version'");
  }
  if (doc.at("version").get<int>() != kFormatVersion) {
    throw ParseError("unsupported format version " + doc.at("version").dump());
  }
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [i, j] : edges) out.push_back(Json::array({i, j}));
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

QubitState state_from_record(const Json& rec, std::size_t k, std::vector<std::string>& warnings) {
  const std::string where = "state record " + std::to_string(k);
  if (!rec.is_object()) throw ParseError(where + ": not an object");
  const bool has_bloch = rec.contains("bloch");
  const bool has_amp = rec.contains("c0re") || rec.contains("c0im") || rec.contains("c1re") ||
                       rec.contains("c1im");
  if (has_bloch == has_amp) {
    throw ParseError(where + ": needs exactly one of {c0re, c0im, c1re, c1im} or {bloch}");
  }
  if (has_bloch) {
    const Json& b = rec.at("bloch");
    if (!b.is_array() || b.size() != 3 || !b[0].is_number() || !b[1].is_number() || !b[2].is_number()) {
      throw ParseError(where + ": 'bloch' must be an array of three numbers");
    }
    std::array<double, 3> n{b[0].get<double>(), b[1].get<double>(), b[2].get<double>()};
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    const double dev = std::abs(norm - 1.0);
    if (!(dev <= kRenormalizeWindow)) {
      throw ParseError(where + ": Bloch vector norm " + sci(norm) + " too far from 1");
    }
    if (dev > kRoundTripTol) {
      warnings.push_back(where + ": Bloch vector renormalized (norm " + sci(norm) + ")");
      for (auto& a : n) a /= norm;
    }
    return from_bloch(n);
  }
  const complex c0(number(rec, "c0re", where), number(rec, "c0im", where));
  const complex c1(number(rec, "c1re", where), number(rec, "c1im", where));
  const double norm2 = std::norm(c0) + std::norm(c1);
  if (std::abs(norm2 - 1.0) <= kNormTol) return QubitState(c0, c1);
  const double dev = std::abs(std::sqrt(norm2) - 1.0);
  if (!(dev <= kRenormalizeWindow)) {
    throw ParseError(where + ": amplitude norm " + sci(std::sqrt(norm2)) + " too far from 1");
  }
  if (dev > kRoundTripTol) {
    warnings.push_back(where + ": amplitudes renormalized (norm " + sci(std::sqrt(norm2)) + ")");
  }
  return QubitState::normalized(c0, c1);
}

}  // namespace

Json family_to_json(const StateFamily& f) {
  Json doc;
  doc["version"] = kFormatVersion;
  Json states = Json::array();
  for (const auto& s : f.states()) {
    states.push_back(Json{{"c0re", s.c0().real()}, {"c0im", s.c0().imag()},
                          {"c1re", s.c1().real()}, {"c1im", s.c1().imag()}});
  }
  doc["states"] = std::move(states);
  if (f.labels()) doc["labels"] = *f.labels();
  return doc;
}

LoadedFamily family_from_json(const Json& doc) {
  check_version(doc);
  if (!doc.contains("states") || !doc.at("states").is_array()) {
    throw ParseError("missing array field 'states'");
  }
  std::vector<std::string> warnings;
  std::vector<QubitState> states;
  const Json& records = doc.at("states");
  for (std::size_t k = 0; k < records.size(); ++k) states.push_back(state_from_record(records[k], k, warnings));

  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels") && !doc.at("labels").is_null()) {
    const Json& l = doc.at("labels");
    if (!l.is_array()) throw ParseError("'labels' must be an array of strings");
    labels.emplace();
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (!l[k].is_string()) throw ParseError("label " + std::to_string(k) + " is not a string");
      labels->push_back(l[k].get<std::string>());
    }
  }
  try {
    return {StateFamily(std::move(states), std::move(labels)), std::move(warnings)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

const char* to_string(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::gram:
      return "gram";
    case MatrixKind::probability:
      return "probability";
    case MatrixKind::phase:
      return "phase";
  }
  return "unknown";
}

Json gram_to_json(const Eigen::MatrixXcd& g, int digits) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = "gram";
  doc["n"] = g.rows();
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) entries.push_back(complex_json(g(i, j), digits));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

Json probability_to_json(const ProbabilityMatrix& p, int digits) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = "probability";
  doc["n"] = p.size();
  Json entries = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) entries.push_back(round_sig(p(i, j), digits));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

Json phase_to_json(const PhaseMatrix& u, int digits) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = "phase";
  doc["n"] = u.size();
  const auto edges = u.support().edges();
  doc["support"] = edges_json(edges);
  Json entries = Json::array();
  for (const auto& [i, j] : edges) entries.push_back(complex_json(*u.at(i, j), digits));
  doc["entries"] = std::move(entries);
  return doc;
}

MatrixFile matrix_from_json(const Json& doc) {
  check_version(doc);
  if (!doc.contains("kind") || !doc.at("kind").is_string()) throw ParseError("missing string field 'kind'");
  if (!doc.contains("n") || !doc.at("n").is_number_integer() || doc.at("n").get<long long>() < 1) {
    throw ParseError("field 'n' must be a positive integer");
  }
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw ParseError("missing array field 'entries'");
  }
  const auto n = doc.at("n").get<std::size_t>();
  const std::string kind = doc.at("kind").get<std::string>();
  const Json& entries = doc.at("entries");
  MatrixFile out;

  if (kind == "gram" || kind == "probability") {
    if (entries.size() != n * n) {
      throw ParseError("'entries' has " + std::to_string(entries.size()) + " values, expected n*n = " +
                       std::to_string(n * n));
    }
  }
  if (kind == "gram") {
    out.kind = MatrixKind::gram;
    out.gram.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t e = 0; e < n * n; ++e) {
      out.gram(static_cast<Eigen::Index>(e / n), static_cast<Eigen::Index>(e % n)) =
          complex_from(entries[e], "entry " + std::to_string(e));
    }
    return out;
  }
  if (kind == "probability") {
    out.kind = MatrixKind::probability;
    Eigen::MatrixXd p(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t e = 0; e < n * n; ++e) {
      if (!entries[e].is_number()) throw ParseError("entry " + std::to_string(e) + " is not a number");
      p(static_cast<Eigen::Index>(e / n), static_cast<Eigen::Index>(e % n)) = entries[e].get<double>();
    }
    try {
      out.probability.emplace(std::move(p));
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what());
    }
    return out;
  }
  if (kind == "phase") {
    out.kind = MatrixKind::phase;
    if (!doc.contains("support") || !doc.at("support").is_array()) {
      throw ParseError("phase matrix needs array field 'support'");
    }
    const Json& support = doc.at("support");
    if (support.size() != entries.size()) {
      throw ParseError("phase matrix needs one entry per support edge");
    }
    PhaseMatrix u(n);
    for (std::size_t e = 0; e < support.size(); ++e) {
      const std::string where = "support edge " + std::to_string(e);
      const Json& edge = support[e];
      if (!edge.is_array() || edge.size() != 2) throw ParseError(where + ": must be a pair [i, j]");
      const std::size_t i = index_from(edge[0], where);
      const std::size_t j = index_from(edge[1], where);
      if (u.has(i, j) && i != j) throw ParseError(where + ": duplicate edge");
      try {
        u.set(i, j, complex_from(entries[e], "entry " + std::to_string(e)));
      } catch (const std::invalid_argument& err) {
        throw ParseError(where + ": " + err.what());
      }
    }
    out.phase.emplace(std::move(u));
    return out;
  }
  throw ParseError("unknown matrix kind '" + kind + "'");
}

Json verdict_to_json(const GramVerdict& v) {
  Json doc;
  doc["realizable"] = v.realizable();
  doc["hermitian_ok"] = v.hermitian_ok;
  doc["unit_diag_ok"] = v.unit_diag_ok;
  doc["psd_ok"] = v.psd_ok;
  doc["rank_ok"] = v.rank_ok;
  doc["rank_estimate"] = v.rank_estimate;
  doc["eigenvalues"] = v.eigenvalues;
  doc["worst_violation"] = v.worst_violation;
  if (!v.realizable()) doc["failed_condition"] = v.failed_condition();
  return doc;
}

Json result_to_json(const RealizabilityResult& r) {
  Json doc;
  doc["status"] = qpc::to_string(r.status);
  doc["residual"] = r.residual;
  doc["diagnostics"] = r.diagnostics;
  if (r.certificate) doc["certificate"] = family_to_json(*r.certificate);
  return doc;
}

Json analyze(const StateFamily& f, double zero_tol, const std::vector<std::string>& load_warnings) {
  const int d = kReportDigits;
  const GramMatrix g = gram(f);
  const PhaseMatrix u = phases(g, zero_tol);
  const SupportGraph og = orthogonality_graph(g, zero_tol);

  Json doc;
  doc["version"] = kFormatVersion;
  doc["n"] = f.size();
  doc["zero_tol"] = zero_tol;
  if (f.labels()) doc["labels"] = *f.labels();

  Json bloch = Json::array();
  for (const auto& s : f.states()) {
    const BlochVector n = to_bloch(s);
    bloch.push_back(Json::array({round_sig(n.x(), d), round_sig(n.y(), d), round_sig(n.z(), d)}));
  }
  doc["bloch"] = std::move(bloch);
  doc["gram"] = gram_to_json(g.matrix(), d);
  doc["probability"] = probability_to_json(probabilities(g), d);
  doc["phase"] = phase_to_json(u, d);
  doc["support_edges"] = edges_json(u.support().edges());
  doc["orthogonality_edges"] = edges_json(og.edges());
  doc["orthogonality_is_matching"] = check_matching(og);

  // Orthogonality graphs are matchings only for pairwise distinct rays.
  std::vector<Edge> duplicates;
  std::vector<bool> redundant(f.size(), false);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (rays_equal(f[i], f[j], kRoundTripTol)) {
        duplicates.emplace_back(i, j);
        redundant[j] = true;
      }
    }
  }
  std::vector<std::string> warnings = load_warnings;
  doc["duplicate_rays"] = edges_json(duplicates);
  if (!duplicates.empty()) {
    SupportGraph distinct_og(f.size());
    for (const auto& [i, j] : og.edges()) {
      if (!redundant[i] && !redundant[j]) distinct_og.add_edge(i, j);
    }
    doc["orthogonality_is_matching_without_duplicates"] = check_matching(distinct_og);
    warnings.push_back(std::to_string(duplicates.size()) +
                       " duplicate ray pair(s); the matching property presumes pairwise distinct rays");
  }

  Json triangles = Json::array();
  for (const auto& t : all_triangles(g, zero_tol)) {
    triangles.push_back(Json{{"triple", t.triple},
                             {"bargmann", complex_json(t.bargmann, d)},
                             {"defect", complex_json(t.defect, d)},
                             {"pancharatnam", round_sig(t.pancharatnam, d)},
                             {"solid_angle", round_sig(t.solid_angle, d)},
                             {"amplitude_factor", round_sig(t.amplitude_factor, d)},
                             {"hemisphere_branch", t.hemisphere_branch}});
  }
  doc["triangles"] = std::move(triangles);
  doc["warnings"] = warnings;
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace qpc::io
