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
#include <vector>

#include "qpc/comparisons.hpp"
#include "qpc/states.hpp"

namespace qpc::detail {

struct DescentOutcome {
  std::vector<QubitState> states;
  /// Max chordal distance on support edges under the smoothed phase map.
  double max_edge_residual = 0.0;
  /// Smallest |g_ij| over support edges.
  double min_edge_overlap = 0.0;
  int iterations = 0;
};

/// Levenberg-Marquardt descent on the smoothed phase residual, starting from
/// Haar-random angles drawn from `seed`. `u` must have at least one support
/// edge.
DescentOutcome descend_phases(const PhaseMatrix& u, std::uint64_t seed, int max_iters,
                              double soft_floor);

}  // namespace qpc::detail
