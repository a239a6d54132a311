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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/report.hpp"
#include "locturan/weighted_graph.hpp"

namespace locturan {

enum class WeightSource { kUnit, kRandom };

struct CorpusOptions {
  std::vector<std::string> theorems;
  std::optional<Vertex> root;          ///< unset: every vertex as root
  std::vector<int> clique_orders{2, 3, 4};
  WeightSource weights = WeightSource::kUnit;
  std::uint64_t seed = 0;              ///< trial t uses seed + t
  int trials = 1;
  bool attach_cover = false;
  unsigned threads = 0;                ///< 0: read LOCTURAN_THREADS, default 1
};

/// LOCTURAN_THREADS as a positive count, else 1.
unsigned worker_count_from_env();

/// Every report one theorem produces on one graph: one per root, clique order
/// or weight trial as the theorem requires. With `fixed`, weighted theorems
/// use that weighting instead of the configured source.
std::vector<VerificationReport> verify_graph(const std::string& theorem, const Graph& g,
                                             const CorpusOptions& options,
                                             const WeightedGraph* fixed = nullptr);

struct TheoremSummary {
  std::string theorem;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t equalities = 0;
  std::size_t family_hits = 0;
  std::size_t family_mismatches = 0;
  std::size_t alt_reading_mismatches = 0;
  std::optional<Rational> min_slack;
  std::string min_slack_witness;
  std::vector<std::string> equality_census;  ///< labels of the equality cases, in order
  std::vector<VerificationReport> failures;
};

struct CorpusResult {
  std::vector<TheoremSummary> summaries;  ///< in options.theorems order
  std::size_t graphs = 0;

  bool ok() const;
  const TheoremSummary& summary(const std::string& theorem) const;
  std::optional<VerificationReport> first_failure() const;
};

/// "graph6", plus " v=<root>", " s=<order>", " seed=<seed>" when set.
std::string report_label(const VerificationReport& r);

using ReportSink = std::function<void(const VerificationReport&)>;

/// Runs every selected theorem on every graph. Work fans out over the
/// configured threads; reports reach `sink` and the summaries in input order.
/// `weighted`, when given, must parallel `graphs`.
CorpusResult verify_graphs(const std::vector<Graph>& graphs, const CorpusOptions& options,
                           const ReportSink& sink = {},
                           const std::vector<WeightedGraph>* weighted = nullptr);

/// All graphs of order n_min..n_max (connected ones if requested). Throws
/// std::out_of_range outside the enumeration range.
CorpusResult verify_corpus(int n_min, int n_max, bool connected_only, const CorpusOptions& options,
                           const ReportSink& sink = {});

/// Aggregate counts and min-slack witnesses as one JSON document.
std::string summary_json(const CorpusResult& result, bool include_census = false);

}  // namespace locturan
