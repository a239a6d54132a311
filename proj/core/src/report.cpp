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

#include "locturan/report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace locturan {

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::kPass: return "pass";
    case ReportStatus::kFail: return "fail";
    case ReportStatus::kHypothesisNotMet: return "hypothesis-not-met";
  }
  return "unknown";
}

void finalize(VerificationReport& report) {
  report.slack = report.rhs - report.lhs;
  report.equality = report.slack.is_zero();
  const bool bad = report.slack.is_negative() || report.family_match == false;
  report.status = bad ? ReportStatus::kFail : ReportStatus::kPass;
}

bool same_outcome(const VerificationReport& a, const VerificationReport& b) {
  return a.graph6 == b.graph6 && a.status == b.status && a.lhs == b.lhs && a.rhs == b.rhs &&
         a.slack == b.slack && a.equality == b.equality && a.family_match == b.family_match &&
         a.family_match_alt == b.family_match_alt;
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "text") return OutputFormat::kText;
  throw std::invalid_argument("unknown output format '" + text + "'");
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["graph6"] = r.graph6;
  if (r.root) j["root"] = *r.root;
  if (r.s) j["s"] = *r.s;
  if (r.weights) j["weights"] = *r.weights;
  if (r.seed) j["seed"] = *r.seed;
  j["status"] = to_string(r.status);
  if (r.status != ReportStatus::kHypothesisNotMet) {
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
    j["slack"] = r.slack.str();
    j["equality"] = r.equality;
  }
  if (r.family) j["family"] = *r.family;
  if (r.family_match) j["family_match"] = *r.family_match;
  if (r.family_match_alt) j["family_match_alt"] = *r.family_match_alt;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j.dump();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::string csv_header() {
  return "theorem,graph6,root,s,weights,seed,status,lhs,rhs,slack,equality,family,family_match,"
         "family_match_alt,witness";
}

std::string to_csv(const VerificationReport& r) {
  const bool measured = r.status != ReportStatus::kHypothesisNotMet;
  std::ostringstream out;
  out << csv_field(r.theorem) << ',' << csv_field(r.graph6) << ',' << opt(r.root) << ',' << opt(r.s) << ','
      << csv_field(opt(r.weights)) << ',' << opt(r.seed) << ',' << to_string(r.status) << ','
      << (measured ? r.lhs.str() : "") << ',' << (measured ? r.rhs.str() : "") << ','
      << (measured ? r.slack.str() : "") << ',' << (measured ? (r.equality ? "true" : "false") : "") << ','
      << csv_field(opt(r.family)) << ',' << opt(r.family_match) << ',' << opt(r.family_match_alt) << ','
      << csv_field(r.witness);
  return out.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << r.theorem << ' ' << r.graph6;
  if (r.root) out << " v=" << *r.root;
  if (r.s) out << " s=" << *r.s;
  if (r.seed) out << " seed=" << *r.seed;
  out << ' ' << to_string(r.status);
  if (r.status != ReportStatus::kHypothesisNotMet) {
    out << ' ' << r.lhs << " <= " << r.rhs << " slack=" << r.slack;
    if (r.equality) out << " equality";
  }
  if (r.family) out << " family=" << *r.family;
  if (r.family_match == false) out << " FAMILY-MISMATCH";
  if (!r.witness.empty()) out << " (" << r.witness << ')';
  return out.str();
}

void write_report(std::ostream& out, const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: out << to_json(report) << '\n'; break;
    case OutputFormat::kCsv: out << to_csv(report) << '\n'; break;
    case OutputFormat::kText: out << to_text(report) << '\n'; break;
  }
}

}  // namespace locturan
