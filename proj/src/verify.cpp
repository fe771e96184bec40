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

#include "qpc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qpc/comparisons.hpp"
#include "qpc/invariants.hpp"
#include "qpc/realizability.hpp"

namespace qpc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Tracker {
  OracleReport report;

  Tracker(std::string name, double tolerance) { report = {std::move(name), 0, 0.0, tolerance, false}; }
  void observe(double discrepancy) {
    // NaN must count as a failure.
    if (!(discrepancy <= report.max_discrepancy)) report.max_discrepancy = discrepancy;
  }
  OracleReport finish(int cases) {
    report.cases_run = cases;
    report.pass = report.max_discrepancy <= report.tolerance;
    return report;
  }
};

std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double random_angle(Rng& rng) { return std::uniform_real_distribution<double>(0.0, kTwoPi)(rng); }

std::array<double, 3> unit_vector(Rng& rng) {
  const BlochVector n = to_bloch(random_state(rng));
  return n.array();
}

using Property = std::function<OracleReport(Rng&, int)>;

OracleReport bargmann_direct(Rng& rng, int cases) {
  Tracker t("bargmann_vs_direct_expansion", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_family(3, rng);
    t.observe(std::abs(bargmann(gram(f), 0, 1, 2) - oracle_bargmann_direct(f, 0, 1, 2)));
  }
  return t.finish(cases);
}

OracleReport trace_product(Rng& rng, int cases) {
  Tracker t("trace_product_vs_direct_expansion", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_family(3, rng);
    t.observe(std::abs(oracle_trace_product(f, 0, 1, 2) - oracle_bargmann_direct(f, 0, 1, 2)));
  }
  return t.finish(cases);
}

OracleReport defect_identity(Rng& rng, int cases) {
  Tracker t("defect_equals_normalized_bargmann", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_nonorthogonal_family(random_size(rng, 3, 8), rng);
    const auto g = gram(f);
    const auto u = phases(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        for (std::size_t k = j + 1; k < f.size(); ++k) {
          const complex b = bargmann(g, i, j, k);
          t.observe(std::abs(defect(u, i, j, k) - b / std::abs(b)));
        }
      }
    }
  }
  return t.finish(cases);
}

OracleReport bloch_probability(Rng& rng, int cases) {
  Tracker t("bloch_probability_formula", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_family(random_size(rng, 2, 8), rng);
    const auto p = probabilities(gram(f));
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto ni = to_bloch(f[i]);
      for (std::size_t j = 0; j < f.size(); ++j) {
        const auto nj = to_bloch(f[j]);
        const double dot = ni.x() * nj.x() + ni.y() * nj.y() + ni.z() * nj.z();
        t.observe(std::abs(p(i, j) - 0.5 * (1.0 + dot)));
        t.observe(std::abs(oracle_trace_pair(f, i, j) - p(i, j)));
      }
    }
  }
  return t.finish(cases);
}

OracleReport bloch_bargmann(Rng& rng, int cases) {
  Tracker t("bloch_bargmann_formula", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_family(3, rng);
    const complex via_bloch = bargmann_bloch(to_bloch(f[0]), to_bloch(f[1]), to_bloch(f[2]));
    t.observe(std::abs(via_bloch - bargmann(gram(f), 0, 1, 2)));
  }
  return t.finish(cases);
}

OracleReport solid_angle_theorem(Rng& rng, int cases) {
  Tracker t("solid_angle_theorem", 1e-9);
  for (int c = 0; c < cases; ++c) {
    // Overlaps above 1e-3 keep every pair away from antipodal on the sphere.
    const auto f = random_nonorthogonal_family(3, rng, 1e-3);
    const auto u = phases(gram(f));
    const double omega = solid_angle(to_bloch(f[0]), to_bloch(f[1]), to_bloch(f[2]));
    t.observe(std::abs(std::polar(1.0, -omega / 2.0) - defect(u, 0, 1, 2)));
  }
  return t.finish(cases);
}

OracleReport rephasing(Rng& rng, int cases) {
  Tracker t("rephasing_invariance", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_nonorthogonal_family(random_size(rng, 3, 8), rng);
    std::vector<double> theta(f.size());
    std::vector<QubitState> moved;
    for (std::size_t i = 0; i < f.size(); ++i) {
      theta[i] = random_angle(rng);
      moved.push_back(f[i].rephased(theta[i]));
    }
    const StateFamily f2(std::move(moved));
    const auto g1 = gram(f);
    const auto g2 = gram(f2);
    const auto u1 = phases(g1);
    const auto u2 = phases(g2);
    const auto p1 = probabilities(g1);
    const auto p2 = probabilities(g2);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        const complex expected = std::polar(1.0, theta[j] - theta[i]) * *u1.at(i, j);
        t.observe(std::abs(*u2.at(i, j) - expected));
        t.observe(std::abs(p1(i, j) - p2(i, j)));
      }
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        for (std::size_t k = j + 1; k < f.size(); ++k) {
          t.observe(std::abs(bargmann(g1, i, j, k) - bargmann(g2, i, j, k)));
          t.observe(std::abs(defect(u1, i, j, k) - defect(u2, i, j, k)));
        }
      }
    }
  }
  return t.finish(cases);
}

OracleReport permutation_law(Rng& rng, int cases) {
  Tracker t("permutation_law", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_nonorthogonal_family(3, rng);
    const auto u = phases(gram(f));
    const complex k012 = defect(u, 0, 1, 2);
    t.observe(std::abs(defect(u, 1, 2, 0) - k012));
    t.observe(std::abs(defect(u, 2, 0, 1) - k012));
    t.observe(std::abs(defect(u, 0, 2, 1) - std::conj(k012)));
    t.observe(std::abs(defect(u, 1, 0, 2) - std::conj(k012)));
    t.observe(std::abs(defect(u, 2, 1, 0) - std::conj(k012)));
  }
  return t.finish(cases);
}

OracleReport coherence_criterion(Rng& rng, int cases) {
  // Real-amplitude triples have coplanar Bloch vectors, so B is real with
  // either sign; generic triples have B off the real axis.
  Tracker t("coherence_criterion_mismatches", 0.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double mismatches = 0.0;
  for (int c = 0; c < cases; ++c) {
    std::vector<QubitState> states;
    const bool real_case = c % 2 == 0;
    for (int s = 0; s < 3; ++s) {
      if (real_case) {
        const double a = angle(rng);
        states.push_back(QubitState::normalized(std::cos(a), std::sin(a)).rephased(angle(rng)));
      } else {
        states.push_back(random_state(rng));
      }
    }
    const StateFamily f(std::move(states));
    const auto g = gram(f);
    const complex b = bargmann(g, 0, 1, 2);
    if (std::abs(b) < 1e-6) continue;
    const complex kappa = defect(phases(g), 0, 1, 2);
    const bool coherent = std::abs(kappa - 1.0) <= 1e-9;
    const bool positive_real = std::abs(b.imag()) <= 1e-9 * std::abs(b) && b.real() > 0.0;
    if (coherent != positive_real) mismatches += 1.0;
  }
  t.observe(mismatches);
  return t.finish(cases);
}

OracleReport ray_dependence(Rng& rng, int cases) {
  Tracker t("defect_depends_only_on_rays", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_nonorthogonal_family(3, rng);
    // A second representative of each ray via the Bloch-sphere gauge.
    std::vector<QubitState> other;
    for (const auto& s : f.states()) other.push_back(from_bloch(to_bloch(s)));
    const StateFamily f2(std::move(other));
    t.observe(std::abs(defect(phases(gram(f)), 0, 1, 2) - defect(phases(gram(f2)), 0, 1, 2)));
  }
  return t.finish(cases);
}

OracleReport bloch_round_trip(Rng& rng, int cases) {
  Tracker t("bloch_round_trip", 1e-9);
  for (int c = 0; c < cases; ++c) {
    const auto n = unit_vector(rng);
    const auto back = to_bloch(from_bloch(n));
    for (int a = 0; a < 3; ++a) t.observe(std::abs(back[a] - n[a]));
    const auto s = random_state(rng);
    t.observe(ray_distance(from_bloch(to_bloch(s)), s));
  }
  return t.finish(cases);
}

OracleReport orthogonality_matching(Rng& rng, int cases) {
  Tracker t("orthogonality_graph_is_matching_failures", 0.0);
  double failures = 0.0;
  for (int c = 0; c < cases; ++c) {
    const auto f = random_family_with_orthogonal_pairs(random_size(rng, 2, 8), rng);
    if (!check_matching(orthogonality_graph(gram(f), 1e-9))) failures += 1.0;
  }
  t.observe(failures);
  return t.finish(cases);
}

OracleReport factor_round_trip(Rng& rng, int cases) {
  Tracker t("gram_factorization_round_trip", 1e-9);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_family(random_size(rng, 1, 10), rng);
    const auto g = gram(f);
    const GramVerdict verdict = check_gram(g.matrix());
    if (!verdict.realizable()) {
      t.observe(1.0);
      continue;
    }
    t.observe((gram(factor_states(g)).matrix() - g.matrix()).cwiseAbs().maxCoeff());
  }
  return t.finish(cases);
}

OracleReport coherent_realization(Rng& rng, int cases) {
  Tracker t("coherent_realization", 1e-12);
  for (int c = 0; c < cases; ++c) {
    const std::size_t n = random_size(rng, 2, 12);
    std::vector<double> lambda(n);
    for (auto& l : lambda) l = random_angle(rng);
    PhaseMatrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) u.set(i, j, std::polar(1.0, lambda[i] - lambda[j]));
    }
    const auto f = realize_coherent(u);
    t.observe(phase_residual(u, f));
    for (std::size_t i = 1; i < n; ++i) t.observe(ray_distance(f[0], f[i]));
  }
  return t.finish(cases);
}

OracleReport phase_search(Rng& rng, int cases) {
  Tracker t("phase_search_witnessed", kRealizeTol);
  for (int c = 0; c < cases; ++c) {
    const auto f = random_nonorthogonal_family(random_size(rng, 3, 6), rng);
    SearchConfig cfg;
    cfg.seed = rng();
    const auto result = realize_phases(phases(gram(f)), cfg);
    t.observe(result.status == RealizeStatus::realizable ? result.residual : 2.0);
  }
  return t.finish(cases);
}

}  // namespace

StateFamily random_nonorthogonal_family(std::size_t n, Rng& rng, double min_overlap) {
  for (;;) {
    auto f = random_family(n, rng);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = std::abs(inner(f[i], f[j])) > min_overlap;
    }
    if (ok) return f;
  }
}

StateFamily random_family_with_orthogonal_pairs(std::size_t n, Rng& rng) {
  std::vector<QubitState> states;
  std::bernoulli_distribution partner(0.5);
  while (states.size() < n) {
    QubitState candidate = random_state(rng);
    if (!states.empty() && partner(rng)) {
      const QubitState& base =
          states[std::uniform_int_distribution<std::size_t>(0, states.size() - 1)(rng)];
      candidate = QubitState(-std::conj(base.c1()), std::conj(base.c0())).rephased(random_angle(rng));
    }
    const bool distinct = std::none_of(states.begin(), states.end(), [&](const QubitState& s) {
      return rays_equal(s, candidate, kRoundTripTol);
    });
    if (distinct) states.push_back(candidate);
  }
  return StateFamily(std::move(states));
}

std::vector<OracleReport> run_verification(std::uint64_t seed, int cases) {
  if (cases < 1) throw std::invalid_argument("verification needs at least one case");
  const std::vector<Property> properties{
      bargmann_direct,   trace_product,    defect_identity,        bloch_probability,
      bloch_bargmann,    solid_angle_theorem, rephasing,           permutation_law,
      coherence_criterion, ray_dependence, bloch_round_trip,       orthogonality_matching,
      factor_round_trip, coherent_realization, phase_search,
  };
  std::vector<OracleReport> reports{oracle_pauli_traces()};
  for (std::size_t p = 0; p < properties.size(); ++p) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p)};
    Rng rng(seq);
    reports.push_back(properties[p](rng, cases));
  }
  return reports;
}

std::string format_report(const OracleReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-44s cases=%-6d max_discrepancy=%.3e tol=%.1e %s", report.name.c_str(),
                report.cases_run, report.max_discrepancy, report.tolerance, report.pass ? "PASS" : "FAIL");
  return buf;
}

}  // namespace qpc
