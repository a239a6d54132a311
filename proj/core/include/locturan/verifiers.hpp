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

#include <optional>
#include <string>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/report.hpp"
#include "locturan/weighted_graph.hpp"

namespace locturan {

// Extremal family matchers. Each one inspects structure only (degrees,
// adjacency, components); none recomputes a path or matching statistic.
namespace families {

bool complete(const Graph& g);
/// Every component is a complete graph.
bool disjoint_cliques(const Graph& g);
/// Every component of G - v, together with v, induces a clique. For a cut
/// vertex v this describes at least two cliques glued at v.
bool cliques_sharing(const Graph& g, Vertex v);
/// K_size plus isolated vertices.
bool clique_plus_isolated(const Graph& g, int size);
/// K_mu joined with an independent set: exactly mu vertices of degree n - 1
/// and every other vertex of degree mu.
bool join_with_independent(const Graph& g, int mu);
/// K_{1, n-1} with n >= 2.
bool star(const Graph& g);

}  // namespace families

// Every verifier returns a finalized report. Preconditions that are part of
// a theorem's hypothesis yield ReportStatus::kHypothesisNotMet rather than an
// exception.

VerificationReport verify_eg_path(const Graph& g);
VerificationReport verify_eg_cycle(const Graph& g);     ///< needs 2-edge-connected
VerificationReport verify_eg_matching(const Graph& g);  ///< needs n >= 2 mu + 1
VerificationReport verify_bbrs(const Graph& g);
VerificationReport verify_mt_path(const Graph& g);
VerificationReport verify_zz_cycle(const Graph& g);
VerificationReport verify_local_bbrs(const Graph& g, Vertex v);  ///< needs connected
/// (e - d(v)/2) / l(v) <= the local_bbrs left side; the step that turns the
/// local bound into l(v) >= (2e - d(v)) / (n - 1).
VerificationReport verify_rooted_chain(const Graph& g, Vertex v);
VerificationReport verify_local_matching(const Graph& g);  ///< needs mu >= 1
/// With `attach_cover`, a small path double cover is built and its
/// certificate chain is recorded in the witness.
VerificationReport verify_weighted_mt(const WeightedGraph& g, bool attach_cover = false);
VerificationReport verify_fmr(const WeightedGraph& g);
VerificationReport verify_bondy_fan(const WeightedGraph& g);  ///< needs 2-edge-connected
VerificationReport verify_ning_vpath(const Graph& g, Vertex v);  ///< needs connected, n >= 2
/// Throw std::invalid_argument for s < 2.
VerificationReport verify_gt_path(const Graph& g, int s);
VerificationReport verify_gt_star(const Graph& g, int s);
/// Computes sum 1/s(e) and sum 1/max{d(u), d(v)} and fails if they differ.
VerificationReport verify_star_prop(const Graph& g);
/// Max degree against (s+1) n_{s+1} / n_s + s - 1; needs n_s >= 1.
/// Throws std::invalid_argument for s < 1.
VerificationReport verify_delta_lemma(const Graph& g, int s);
/// The same bound against the longest path.
VerificationReport verify_ning_peng(const Graph& g, int s);
/// mu of the (2 mu + 1)-closure against mu; fails unless equal.
VerificationReport verify_closure_matching(const Graph& g);
/// e(closure) against the clique bound f; needs mu >= 1.
VerificationReport verify_nw_bound(const Graph& g);
/// Vertices outside isolated ones against 2 mu + 1 under the stability hypothesis.
VerificationReport verify_stability(const Graph& g);

/// Which extra parameter a theorem ranges over.
enum class TheoremParam { kNone, kRoot, kCliqueOrder, kWeights };

struct TheoremInfo {
  std::string id;
  TheoremParam param = TheoremParam::kNone;
  std::string description;
};

const std::vector<TheoremInfo>& theorem_catalog();
/// Throws std::invalid_argument for unknown ids.
const TheoremInfo& theorem_info(const std::string& id);

}  // namespace locturan
