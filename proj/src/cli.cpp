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

#include "qpc/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpc/comparisons.hpp"
#include "qpc/io.hpp"
#include "qpc/realizability.hpp"
#include "qpc/verify.hpp"

namespace qpc {

namespace {

struct GlobalOptions {
  double zero_tol = kDefaultZeroTol;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const GlobalOptions& g) {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("QPC_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || *env == '-') {
      throw UsageError(std::string("QPC_SEED is not a nonnegative integer: '") + env + "'");
    }
    return v;
  }
  return 0;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string edge_list(const io::Json& edges) {
  std::string s;
  for (const auto& e : edges) {
    if (!s.empty()) s += " ";
    s += "{" + e[0].dump() + "," + e[1].dump() + "}";
  }
  return s.empty() ? "(none)" : s;
}

void emit(const GlobalOptions& g, std::ostream& out, const std::string& document) {
  if (g.out.empty()) {
    out << document;
  } else {
    io::write_text(g.out, document);
  }
}

int cmd_gen(const GlobalOptions& g, long long n, std::ostream& out) {
  if (n < 1) throw UsageError("gen: --n must be at least 1");
  const StateFamily f = random_family(static_cast<std::size_t>(n), resolve_seed(g));
  emit(g, out, io::dump(io::family_to_json(f)));
  return kExitOk;
}

void print_analysis_text(const io::Json& doc, std::ostream& out) {
  out << "states: " << doc["n"].get<std::size_t>() << "\n";
  out << "support edges: " << edge_list(doc["support_edges"]) << "\n";
  out << "orthogonality edges: " << edge_list(doc["orthogonality_edges"]) << "\n";
  out << "orthogonality graph is a matching: " << (doc["orthogonality_is_matching"].get<bool>() ? "yes" : "no")
      << "\n";
  if (!doc["duplicate_rays"].empty()) out << "duplicate rays: " << edge_list(doc["duplicate_rays"]) << "\n";
  out << "triangles: " << doc["triangles"].size() << "\n";
  for (const auto& t : doc["triangles"]) {
    out << "  (" << t["triple"][0] << "," << t["triple"][1] << "," << t["triple"][2] << ")"
        << "  B = " << fmt("%.15g", t["bargmann"]["re"].get<double>()) << " + "
        << fmt("%.15g", t["bargmann"]["im"].get<double>()) << "i"
        << "  gamma = " << fmt("%.15g", t["pancharatnam"].get<double>())
        << "  Omega = " << fmt("%.15g", t["solid_angle"].get<double>())
        << "  |g||g||g| = " << fmt("%.15g", t["amplitude_factor"].get<double>())
        << (t["hemisphere_branch"].get<bool>() ? "  [hemisphere branch]" : "") << "\n";
  }
  for (const auto& w : doc["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
}

int cmd_analyze(const GlobalOptions& g, const std::string& path, const std::string& emit_gram,
                const std::string& emit_phase, std::ostream& out, std::ostream& err) {
  const io::LoadedFamily loaded = io::family_from_json(io::read_json(path));
  for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
  const io::Json doc = io::analyze(loaded.family, g.zero_tol, loaded.warnings);
  const GramMatrix gm = gram(loaded.family);
  if (!emit_gram.empty()) io::write_text(emit_gram, io::dump(io::gram_to_json(gm.matrix())));
  if (!emit_phase.empty()) io::write_text(emit_phase, io::dump(io::phase_to_json(phases(gm, g.zero_tol))));

  if (!g.out.empty()) io::write_text(g.out, io::dump(doc));
  if (g.structured()) {
    if (g.out.empty()) out << io::dump(doc);
  } else {
    print_analysis_text(doc, out);
  }
  return kExitOk;
}

int cmd_check(const GlobalOptions& g, const std::string& path, std::ostream& out) {
  const io::MatrixFile m = io::matrix_from_json(io::read_json(path));
  if (m.kind != io::MatrixKind::gram) {
    throw UsageError(std::string("check expects a matrix of kind gram, got ") + io::to_string(m.kind));
  }
  const GramVerdict v = check_gram(m.gram);
  if (g.structured()) {
    out << io::dump(io::verdict_to_json(v));
  } else {
    out << "hermitian_ok: " << (v.hermitian_ok ? "true" : "false") << "\n"
        << "unit_diag_ok: " << (v.unit_diag_ok ? "true" : "false") << "\n"
        << "psd_ok: " << (v.psd_ok ? "true" : "false") << "\n"
        << "rank_ok: " << (v.rank_ok ? "true" : "false") << "\n"
        << "rank_estimate: " << v.rank_estimate << "\n"
        << "eigenvalues:";
    for (double e : v.eigenvalues) out << " " << fmt("%.15g", e);
    out << "\nworst_violation: " << fmt("%.3e", v.worst_violation) << "\n";
    out << (v.realizable() ? "realizable" : "not realizable: " + v.failed_condition()) << "\n";
  }
  return v.realizable() ? kExitOk : kExitNegative;
}

int cmd_realize(const GlobalOptions& g, const std::string& path, SearchConfig cfg, std::ostream& out) {
  const io::MatrixFile m = io::matrix_from_json(io::read_json(path));
  RealizabilityResult result;
  switch (m.kind) {
    case io::MatrixKind::gram:
      result = realize_gram(m.gram);
      break;
    case io::MatrixKind::phase:
      cfg.seed = resolve_seed(g);
      cfg.zero_tol = g.zero_tol;
      result = realize_phases(*m.phase, cfg);
      break;
    case io::MatrixKind::probability:
      throw UsageError("realize expects a matrix of kind gram or phase");
  }
  if (result.certificate && !g.out.empty()) {
    io::write_text(g.out, io::dump(io::family_to_json(*result.certificate)));
  }
  if (g.structured()) {
    out << io::dump(io::result_to_json(result));
  } else {
    out << "status: " << to_string(result.status) << "\n"
        << "residual: " << fmt("%.3e", result.residual) << "\n";
    if (!result.diagnostics.empty()) out << result.diagnostics << (result.diagnostics.back() == '\n' ? "" : "\n");
    if (result.certificate && g.out.empty()) out << io::dump(io::family_to_json(*result.certificate));
  }
  switch (result.status) {
    case RealizeStatus::realizable:
      return kExitOk;
    case RealizeStatus::not_realizable:
      return kExitNegative;
    case RealizeStatus::search_failed:
      return kExitInconclusive;
  }
  return kExitUsage;
}

int cmd_verify(const GlobalOptions& g, int cases, std::ostream& out) {
  if (cases < 1) throw UsageError("verify: --cases must be at least 1");
  const auto reports = run_verification(resolve_seed(g), cases);
  bool all_pass = true;
  std::string text;
  io::Json doc = io::Json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    text += format_report(r) + "\n";
    doc.push_back(io::Json{{"name", r.name},
                           {"cases_run", r.cases_run},
                           {"max_discrepancy", r.max_discrepancy},
                           {"tolerance", r.tolerance},
                           {"pass", r.pass}});
  }
  emit(g, out, g.structured() ? io::dump(doc) : text);
  return all_pass ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise-comparison structure of qubit state families"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::uint64_t seed_value = 0;
  app.add_option("--zero-tol", g.zero_tol, "Overlaps at or below this count as orthogonal")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed_value, "Random seed (falls back to $QPC_SEED, then 0)");
  app.add_option("--out", g.out, "Output path");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  long long gen_n = 0;
  auto* gen = app.add_subcommand("gen", "Write a Haar-random state family");
  gen->add_option("--n", gen_n, "Number of states")->required();

  std::string family_path;
  std::string emit_gram;
  std::string emit_phase;
  auto* analyze = app.add_subcommand("analyze", "Matrices, graphs and triangle invariants of a family");
  analyze->add_option("family", family_path, "Family file")->required();
  analyze->add_option("--emit-gram", emit_gram, "Also write the Gram matrix file here");
  analyze->add_option("--emit-phase", emit_phase, "Also write the phase matrix file here");

  std::string check_path;
  auto* check = app.add_subcommand("check", "Test a Gram matrix for qubit realizability");
  check->add_option("matrix", check_path, "Matrix file of kind gram")->required();

  std::string realize_path;
  SearchConfig cfg;
  auto* realize = app.add_subcommand("realize", "Find states realizing a Gram or phase matrix");
  realize->add_option("matrix", realize_path, "Matrix file of kind gram or phase")->required();
  realize->add_option("--restarts", cfg.restarts, "Search restarts")->capture_default_str();
  realize->add_option("--max-iters", cfg.max_iters, "Iterations per restart")->capture_default_str();
  realize->add_option("--soft-floor", cfg.soft_floor, "Overlap floor in the search residual")
      ->check(CLI::PositiveNumber);
  realize->add_option("--realize-tol", cfg.realize_tol, "Residual accepted as realized")
      ->check(CLI::PositiveNumber);

  int cases = 100;
  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  verify->add_option("--cases", cases, "Random instances per property")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  try {
    if (*gen) return cmd_gen(g, gen_n, out);
    if (*analyze) return cmd_analyze(g, family_path, emit_gram, emit_phase, out, err);
    if (*check) return cmd_check(g, check_path, out);
    if (*realize) {
      if (cfg.restarts < 1 || cfg.max_iters < 1) throw UsageError("--restarts and --max-iters must be positive");
      return cmd_realize(g, realize_path, cfg, out);
    }
    if (*verify) return cmd_verify(g, cases, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qpc
