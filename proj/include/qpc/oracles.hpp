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

#include <cstddef>
#include <string>

#include "qpc/states.hpp"

// Brute-force recomputations for cross-checking. Nothing here may include or
// call the comparisons, invariants or realizability modules.

namespace qpc {

struct OracleReport {
  std::string name;
  int cases_run = 0;
  double max_discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// B_ijk expanded componentwise from raw amplitudes. Throws
/// std::invalid_argument on repeated or out-of-range indices.
complex oracle_bargmann_direct(const StateFamily& f, std::size_t i, std::size_t j, std::size_t k);

/// Tr(rho_i rho_j rho_k) with each rho built as an explicit 2x2 outer product.
complex oracle_trace_product(const StateFamily& f, std::size_t i, std::size_t j, std::size_t k);

/// Tr(rho_i rho_j), same construction.
double oracle_trace_pair(const StateFamily& f, std::size_t i, std::size_t j);

/// Checks Tr(s_a s_b) = 2 delta_ab (9 cases) and Tr(s_a s_b s_c) = 2i eps_abc
/// (27 cases) by explicit 2x2 arithmetic; tolerance 1e-15.
OracleReport oracle_pauli_traces();

}  // namespace qpc
