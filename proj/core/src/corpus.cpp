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

#include "locturan/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "locturan/canonical.hpp"
#include "locturan/verifiers.hpp"

namespace locturan {

unsigned worker_count_from_env() {
  const char* raw = std::getenv("LOCTURAN_THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  return (end != raw && *end == '\0' && value > 0) ? static_cast<unsigned>(value) : 1;
}

namespace {

VerificationReport run_plain(const std::string& id, const Graph& g) {
  if (id == "eg-path") return verify_eg_path(g);
  if (id == "eg-cycle") return verify_eg_cycle(g);
  if (id == "eg-matching") return verify_eg_matching(g);
  if (id == "bbrs") return verify_bbrs(g);
  if (id == "mt") return verify_mt_path(g);
  if (id == "zz") return verify_zz_cycle(g);
  if (id == "local-matching") return verify_local_matching(g);
  if (id == "star") return verify_star_prop(g);
  if (id == "closure-matching") return verify_closure_matching(g);
  if (id == "nw-bound") return verify_nw_bound(g);
  if (id == "stability") return verify_stability(g);
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

VerificationReport run_rooted(const std::string& id, const Graph& g, Vertex v) {
  if (id == "local-bbrs") return verify_local_bbrs(g, v);
  if (id == "rooted-chain") return verify_rooted_chain(g, v);
  if (id == "ning") return verify_ning_vpath(g, v);
  throw std::invalid_argument("unknown rooted theorem id '" + id + "'");
}

VerificationReport run_clique(const std::string& id, const Graph& g, int s) {
  if (id == "gt-path") return verify_gt_path(g, s);
  if (id == "gt-star") return verify_gt_star(g, s);
  if (id == "delta") return verify_delta_lemma(g, s);
  if (id == "ning-peng") return verify_ning_peng(g, s);
  throw std::invalid_argument("unknown clique theorem id '" + id + "'");
}

VerificationReport run_weighted(const std::string& id, const WeightedGraph& g, bool attach_cover) {
  if (id == "weighted-mt") return verify_weighted_mt(g, attach_cover);
  if (id == "fmr") return verify_fmr(g);
  if (id == "bondy-fan") return verify_bondy_fan(g);
  throw std::invalid_argument("unknown weighted theorem id '" + id + "'");
}

}  // namespace

std::vector<VerificationReport> verify_graph(const std::string& theorem, const Graph& g,
                                             const CorpusOptions& options, const WeightedGraph* fixed) {
  std::vector<VerificationReport> out;
  switch (theorem_info(theorem).param) {
    case TheoremParam::kNone:
      out.push_back(run_plain(theorem, g));
      break;
    case TheoremParam::kRoot:
      if (options.root) {
        if (*options.root < 0 || *options.root >= g.order()) {
          throw std::invalid_argument("root " + std::to_string(*options.root) + " is not a vertex");
        }
        out.push_back(run_rooted(theorem, g, *options.root));
      } else {
        for (Vertex v = 0; v < g.order(); ++v) out.push_back(run_rooted(theorem, g, v));
      }
      break;
    case TheoremParam::kCliqueOrder:
      for (int s : options.clique_orders) out.push_back(run_clique(theorem, g, s));
      break;
    case TheoremParam::kWeights:
      if (fixed != nullptr) {
        out.push_back(run_weighted(theorem, *fixed, options.attach_cover));
      } else if (options.weights == WeightSource::kUnit) {
        out.push_back(run_weighted(theorem, WeightedGraph::unit(g), options.attach_cover));
      } else {
        for (int t = 0; t < options.trials; ++t) {
          const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(t);
          auto r = run_weighted(theorem, WeightSampler(seed).sample(g), options.attach_cover);
          r.seed = seed;
          out.push_back(std::move(r));
        }
      }
      break;
  }
  return out;
}

std::string report_label(const VerificationReport& r) {
  std::string label = r.graph6;
  if (r.root) label += " v=" + std::to_string(*r.root);
  if (r.s) label += " s=" + std::to_string(*r.s);
  if (r.seed) label += " seed=" + std::to_string(*r.seed);
  return label;
}

bool CorpusResult::ok() const {
  return std::all_of(summaries.begin(), summaries.end(), [](const TheoremSummary& s) { return s.failed == 0; });
}

const TheoremSummary& CorpusResult::summary(const std::string& theorem) const {
  for (const TheoremSummary& s : summaries) {
    if (s.theorem == theorem) return s;
  }
  throw std::out_of_range("no summary for '" + theorem + "'");
}

std::optional<VerificationReport> CorpusResult::first_failure() const {
  for (const TheoremSummary& s : summaries) {
    if (!s.failures.empty()) return s.failures.front();
  }
  return std::nullopt;
}

namespace {

void absorb(TheoremSummary& s, const VerificationReport& r) {
  ++s.checked;
  switch (r.status) {
    case ReportStatus::kHypothesisNotMet: ++s.hypothesis_not_met; return;
    case ReportStatus::kFail: ++s.failed; s.failures.push_back(r); break;
    case ReportStatus::kPass: ++s.passed; break;
  }
  if (r.equality) {
    ++s.equalities;
    s.equality_census.push_back(report_label(r));
  }
  if (r.family) ++s.family_hits;
  if (r.family_match == false) ++s.family_mismatches;
  if (r.family_match_alt == false) ++s.alt_reading_mismatches;
  if (!s.min_slack || r.slack < *s.min_slack) {
    s.min_slack = r.slack;
    s.min_slack_witness = report_label(r);
  }
}

}  // namespace

CorpusResult verify_graphs(const std::vector<Graph>& graphs, const CorpusOptions& options, const ReportSink& sink,
                           const std::vector<WeightedGraph>* weighted) {
  if (weighted != nullptr && weighted->size() != graphs.size()) {
    throw std::invalid_argument("weighted inputs must parallel the graph list");
  }
  for (const std::string& id : options.theorems) theorem_info(id);

  CorpusResult result;
  result.graphs = graphs.size();
  for (const std::string& id : options.theorems) {
    TheoremSummary summary;
    summary.theorem = id;
    result.summaries.push_back(std::move(summary));
  }

  const unsigned workers = std::max(1U, options.threads ? options.threads : worker_count_from_env());
  // Blocks bound memory: each block is computed in parallel, then merged in
  // input order before the next starts.
  constexpr std::size_t kBlock = 512;
  std::vector<std::vector<std::vector<VerificationReport>>> slots;
  for (std::size_t begin = 0; begin < graphs.size(); begin += kBlock) {
    const std::size_t end = std::min(graphs.size(), begin + kBlock);
    slots.assign(end - begin, {});
    std::atomic<std::size_t> next{begin};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&] {
      try {
        for (std::size_t i = next++; i < end && !failed; i = next++) {
          auto& slot = slots[i - begin];
          const WeightedGraph* fixed = weighted ? &(*weighted)[i] : nullptr;
          for (const std::string& id : options.theorems) slot.push_back(verify_graph(id, graphs[i], options, fixed));
        }
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(workers, end - begin); ++t) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    for (auto& slot : slots) {
      for (std::size_t k = 0; k < slot.size(); ++k) {
        for (const VerificationReport& r : slot[k]) {
          absorb(result.summaries[k], r);
          if (sink) sink(r);
        }
      }
    }
  }
  return result;
}

CorpusResult verify_corpus(int n_min, int n_max, bool connected_only, const CorpusOptions& options,
                           const ReportSink& sink) {
  if (n_min < 1 || n_max > kMaxEnumerationOrder || n_min > n_max) {
    throw std::out_of_range("enumeration supports 1 <= n_min <= n_max <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> graphs;
  for (int n = n_min; n <= n_max; ++n) {
    auto level = enumerate_graphs(n, connected_only);
    graphs.insert(graphs.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return verify_graphs(graphs, options, sink);
}

std::string summary_json(const CorpusResult& result, bool include_census) {
  nlohmann::ordered_json doc;
  doc["graphs"] = result.graphs;
  doc["ok"] = result.ok();
  auto& list = doc["theorems"] = nlohmann::ordered_json::array();
  for (const TheoremSummary& s : result.summaries) {
    nlohmann::ordered_json j;
    j["theorem"] = s.theorem;
    j["checked"] = s.checked;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["hypothesis_not_met"] = s.hypothesis_not_met;
    j["equalities"] = s.equalities;
    j["family_hits"] = s.family_hits;
    j["family_mismatches"] = s.family_mismatches;
    j["alt_reading_mismatches"] = s.alt_reading_mismatches;
    if (s.min_slack) {
      j["min_slack"] = s.min_slack->str();
      j["min_slack_witness"] = s.min_slack_witness;
    }
    if (include_census) j["equality_census"] = s.equality_census;
    if (!s.failures.empty()) j["first_failure"] = report_label(s.failures.front());
    list.push_back(std::move(j));
  }
  return doc.dump();
}

}  // namespace locturan
