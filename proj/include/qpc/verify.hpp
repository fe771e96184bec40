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

#include <cstdint>
#include <string>
#include <vector>

#include "qpc/oracles.hpp"
#include "qpc/states.hpp"

namespace qpc {

/// Runs every registered identity over `cases` seeded random instances,
/// comparing the main computation path against an independent one. Output
/// order and values depend only on (seed, cases). Throws
/// std::invalid_argument if cases < 1.
std::vector<OracleReport> run_verification(std::uint64_t seed, int cases);

/// "name cases=N max_discrepancy=X tol=T PASS|FAIL", fixed formatting.
std::string format_report(const OracleReport& report);

/// Random family of n states whose pairwise overlaps all exceed min_overlap.
StateFamily random_nonorthogonal_family(std::size_t n, Rng& rng, double min_overlap = 1e-6);

/// Random family mixing Haar states with exact orthogonal partners of some of
/// them, filtered so that all rays are pairwise distinct at kRoundTripTol.
StateFamily random_family_with_orthogonal_pairs(std::size_t n, Rng& rng);

}  // namespace qpc
