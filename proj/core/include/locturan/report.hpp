// Copyright 2026 The locturan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/rational.hpp"

namespace locturan {

enum class ReportStatus { kPass, kFail, kHypothesisNotMet };

std::string to_string(ReportStatus status);

/// One inequality evaluated on one graph. Inequalities are normalized to
/// lhs <= rhs, so for lower bounds on a path or cycle the bound is `lhs`
/// and the achieved value is `rhs`.
struct VerificationReport {
  std::string theorem;
  std::string graph6;
  std::optional<Vertex> root;
  std::optional<int> s;
  std::optional<std::string> weights;   ///< comma-separated p/q list
  std::optional<std::uint64_t> seed;
  ReportStatus status = ReportStatus::kPass;
  Rational lhs;
  Rational rhs;
  Rational slack;
  bool equality = false;
  std::optional<std::string> family;    ///< extremal family the graph matches, if any
  std::optional<bool> family_match;     ///< equality == family membership; unset when not applicable
  std::optional<bool> family_match_alt; ///< the same test under an alternative reading of the family
  std::string witness;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Fills slack and equality from lhs/rhs and sets the status: Fail on negative
/// slack or on a false family_match, Pass otherwise.
void finalize(VerificationReport& report);

/// True when the numeric outcome (graph, sides, slack, equality, status,
/// family flags) agrees; the theorem id and parameters are ignored.
bool same_outcome(const VerificationReport& a, const VerificationReport& b);

enum class OutputFormat { kJson, kCsv, kText };

/// Accepts "json", "csv", "text".
OutputFormat parse_output_format(const std::string& text);

/// Compact single-line JSON; rationals are "p/q" strings.
std::string to_json(const VerificationReport& report);
std::string csv_header();
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

void write_report(std::ostream& out, const VerificationReport& report, OutputFormat format);

}  // namespace locturan
