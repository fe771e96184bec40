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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "qpc/comparisons.hpp"
#include "qpc/realizability.hpp"
#include "qpc/states.hpp"

namespace qpc::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;
/// Amplitude norms within this of 1 are renormalized with a warning on load;
/// beyond it the record is rejected.
inline constexpr double kRenormalizeWindow = 1e-6;
/// Significant digits for report output. Files use the shortest round-trip form.
inline constexpr int kReportDigits = 15;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedFamily {
  StateFamily family;
  std::vector<std::string> warnings;
};

Json family_to_json(const StateFamily& f);
/// Throws ParseError naming the offending record.
LoadedFamily family_from_json(const Json& doc);

enum class MatrixKind { gram, probability, phase };

const char* to_string(MatrixKind kind) noexcept;

/// A loaded matrix file. Gram files are kept raw so that check_gram can judge
/// them; probability and phase files are validated into their types.
struct MatrixFile {
  MatrixKind kind = MatrixKind::gram;
  Eigen::MatrixXcd gram;
  std::optional<ProbabilityMatrix> probability;
  std::optional<PhaseMatrix> phase;
};

/// `digits` below 17 rounds every number to that many significant digits.
Json gram_to_json(const Eigen::MatrixXcd& g, int digits = 17);
Json probability_to_json(const ProbabilityMatrix& p, int digits = 17);
Json phase_to_json(const PhaseMatrix& u, int digits = 17);
/// Throws ParseError on structural problems or violated type invariants.
MatrixFile matrix_from_json(const Json& doc);

Json verdict_to_json(const GramVerdict& v);
Json result_to_json(const RealizabilityResult& r);

/// Full comparison structure of a family: matrices, graphs, triangle reports.
Json analyze(const StateFamily& f, double zero_tol = kDefaultZeroTol,
             const std::vector<std::string>& load_warnings = {});

/// Canonical serialization: two-space indent, trailing newline.
std::string dump(const Json& doc);

/// Throws IoError when unreadable, ParseError on malformed JSON.
Json read_json(const std::string& path);
/// Throws IoError when the path cannot be written.
void write_text(const std::string& path, const std::string& text);

}  // namespace qpc::io
