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

#include "locturan/verifiers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "locturan/connectivity.hpp"
#include "locturan/covers.hpp"
#include "locturan/graph6.hpp"
#include "locturan/local_stats.hpp"
#include "locturan/matching.hpp"
#include "locturan/matching_structure.hpp"

namespace locturan {

namespace families {

bool complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return n == 0 || g.size() == n * (n - 1) / 2;
}

bool disjoint_cliques(const Graph& g) {
  for (VertexSet comp : connected_components(g)) {
    for (Vertex v : members(comp)) {
      if (g.neighbors(v) != (comp & ~bit(v))) return false;
    }
  }
  return true;
}

bool cliques_sharing(const Graph& g, Vertex v) {
  for (VertexSet comp : connected_components(g.isolate(bit(v)))) {
    if (comp == bit(v)) continue;
    const VertexSet block = comp | bit(v);
    for (Vertex x : members(block)) {
      if ((g.neighbors(x) & block) != (block & ~bit(x))) return false;
    }
  }
  return true;
}

bool clique_plus_isolated(const Graph& g, int size) {
  const VertexSet core = g.non_isolated();
  if (popcount(core) != size) return false;
  for (Vertex x : members(core)) {
    if (g.neighbors(x) != (core & ~bit(x))) return false;
  }
  return true;
}

bool join_with_independent(const Graph& g, int mu) {
  const int n = g.order();
  int hubs = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      ++hubs;
    } else if (g.degree(v) != mu) {
      return false;
    }
  }
  return hubs == mu && n - 1 != mu;
}

bool star(const Graph& g) {
  const int n = g.order();
  return n >= 2 && g.size() == static_cast<std::size_t>(n - 1) && g.max_degree() == n - 1;
}

}  // namespace families

namespace {

Rational frac(std::int64_t p, std::int64_t q) { return Rational(p, q); }
Rational integer(std::int64_t v) { return Rational(v); }
Rational count(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

VerificationReport start(const std::string& id, const Graph& g) {
  VerificationReport r;
  r.theorem = id;
  r.graph6 = write_graph6(g);
  return r;
}

VerificationReport not_met(VerificationReport r, const std::string& reason) {
  r.status = ReportStatus::kHypothesisNotMet;
  r.witness = reason;
  return r;
}

// Family membership is decided structurally; the report fails unless it agrees
// with the equality flag.
void settle_family(VerificationReport& r, bool member, const std::string& name) {
  finalize(r);
  if (member) r.family = name;
  r.family_match = r.equality == member;
  finalize(r);
}

std::string edge_map(const std::vector<Edge>& edges, const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) out << (i ? " " : "") << edges[i].str() << ':' << values[i];
  return out.str();
}

// Attaches the per-edge statistic to a failing report.
void witness_on_failure(VerificationReport& r, const EdgeStatProfile& profile) {
  if (r.status == ReportStatus::kFail && r.witness.empty()) r.witness = edge_map(profile.edges, profile.values);
}

Rational reciprocal_sum(const std::vector<int>& values) {
  Rational sum;
  for (int v : values) sum += frac(1, v);
  return sum;
}

Rational weighted_ratio_sum(const WeightedGraph& g) {
  const WeightedEdgeProfile wp = weighted_path_profile(g);
  Rational sum;
  for (std::size_t i = 0; i < wp.edges.size(); ++i) {
    if (!g.weight(i).is_zero()) sum += g.weight(i) / wp.values[i];
  }
  return sum;
}

int longest_cycle(const Graph& g) {
  const EdgeStatProfile cp = edge_profile(g, StatKind::kCycle);
  return cp.values.empty() ? 0 : *std::max_element(cp.values.begin(), cp.values.end());
}

std::string set_str(VertexSet s) {
  std::string out = "{";
  for (Vertex v : members(s)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

VerificationReport verify_eg_path(const Graph& g) {
  auto r = start("eg-path", g);
  r.lhs = frac(2 * static_cast<std::int64_t>(g.size()), g.order());
  r.rhs = integer(longest_path(g));
  finalize(r);
  return r;
}

VerificationReport verify_eg_cycle(const Graph& g) {
  auto r = start("eg-cycle", g);
  if (!is_two_edge_connected(g)) return not_met(r, "not 2-edge-connected");
  r.lhs = frac(2 * static_cast<std::int64_t>(g.size()), g.order() - 1);
  r.rhs = integer(longest_cycle(g));
  finalize(r);
  return r;
}

VerificationReport verify_eg_matching(const Graph& g) {
  auto r = start("eg-matching", g);
  const std::int64_t k = matching_number(g);
  const std::int64_t n = g.order();
  if (n < 2 * k + 1) return not_met(r, "n < 2 mu + 1");
  r.lhs = count(g.size());
  r.rhs = integer(std::max((2 * k + 1) * (2 * k) / 2, k * (k - 1) / 2 + (n - k) * k));
  finalize(r);
  return r;
}

VerificationReport verify_bbrs(const Graph& g) {
  auto r = start("bbrs", g);
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += longest_vpath(g, v);
  r.lhs = count(g.size());
  r.rhs = frac(total, 2);
  settle_family(r, families::disjoint_cliques(g), "disjoint-cliques");
  return r;
}

VerificationReport verify_mt_path(const Graph& g) {
  auto r = start("mt", g);
  const EdgeStatProfile p = edge_profile(g, StatKind::kPath);
  r.lhs = reciprocal_sum(p.values);
  r.rhs = frac(g.order(), 2);
  finalize(r);
  witness_on_failure(r, p);
  return r;
}

VerificationReport verify_zz_cycle(const Graph& g) {
  auto r = start("zz", g);
  const EdgeStatProfile c = edge_profile(g, StatKind::kCycle);
  r.lhs = reciprocal_sum(c.values);
  r.rhs = frac(g.order() - 1, 2);
  finalize(r);
  witness_on_failure(r, c);
  return r;
}

VerificationReport verify_local_bbrs(const Graph& g, Vertex v) {
  auto r = start("local-bbrs", g);
  r.root = v;
  if (!is_connected(g)) return not_met(r, "disconnected");
  const EdgeStatProfile pv = edge_profile(g, StatKind::kRootedPath, v);
  for (std::size_t i = 0; i < pv.edges.size(); ++i) {
    r.lhs += frac(1, pv.values[i]) / integer(pv.edges[i].incident_to(v) ? 2 : 1);
  }
  r.rhs = frac(g.order() - 1, 2);
  if (contains(cut_vertices(g), v)) {
    settle_family(r, families::cliques_sharing(g, v), "cliques-sharing-v");
  } else {
    settle_family(r, families::complete(g), "complete");
  }
  witness_on_failure(r, pv);
  return r;
}

VerificationReport verify_rooted_chain(const Graph& g, Vertex v) {
  auto r = start("rooted-chain", g);
  r.root = v;
  if (!is_connected(g)) return not_met(r, "disconnected");
  const VerificationReport local = verify_local_bbrs(g, v);
  const int ell = longest_vpath(g, v);
  if (ell > 0) r.lhs = (count(g.size()) - frac(g.degree(v), 2)) / integer(ell);
  r.rhs = local.lhs;
  finalize(r);
  return r;
}

VerificationReport verify_local_matching(const Graph& g) {
  auto r = start("local-matching", g);
  const EdgeStatProfile m = edge_profile(g, StatKind::kMatching);
  const std::int64_t mu = matching_number(g);
  const std::int64_t n = g.order();
  if (mu < 1) return not_met(r, "edgeless (mu = 0)");
  r.lhs = reciprocal_sum(m.values);

  // Reading A follows the equality clause as stated; reading B replaces the
  // range n <= 5mu/2 + 1 for the clique family with the single value.
  bool a = false;
  bool b = false;
  std::string name;
  if (n == 2 * mu) {
    r.rhs = integer(n - 1);
    a = b = families::complete(g);
    name = "complete";
  } else if (mu == 1) {
    r.rhs = integer(std::max<std::int64_t>(3, n - 1));
    if (n == 3 && families::complete(g)) {
      name = "triangle";
    } else if (n == 4 && families::clique_plus_isolated(g, 3)) {
      name = "triangle-plus-isolated";
    } else if (n >= 4 && families::star(g)) {
      name = "star";
    }
    a = b = !name.empty();
  } else {
    r.rhs = max(integer(2 * mu + 1), integer(n) - frac(mu, 2));
    const bool clique = families::clique_plus_isolated(g, static_cast<int>(2 * mu + 1));
    const bool joined = 2 * n >= 5 * mu + 2 && families::join_with_independent(g, static_cast<int>(mu));
    const bool clique_a = clique && 2 * n <= 5 * mu + 2;
    const bool clique_b = clique && 2 * n == 5 * mu + 2;
    a = clique_a || joined;
    b = clique_b || joined;
    if (clique_a) name = "clique-plus-isolated";
    if (joined) name = "clique-join-independent";
  }
  settle_family(r, a, name);
  r.family_match_alt = r.equality == b;
  witness_on_failure(r, m);
  return r;
}

VerificationReport verify_weighted_mt(const WeightedGraph& g, bool attach_cover) {
  auto r = start("weighted-mt", g.graph());
  r.weights = g.weights_string();
  r.lhs = weighted_ratio_sum(g);
  r.rhs = frac(g.graph().order(), 2);
  finalize(r);
  if (attach_cover) {
    const CoverBound cb = bound_from_cover(g, find_spdc(g.graph()));
    const bool chain = cb.doubling_identity && cb.per_path_at_most_one && cb.edge_sum == r.lhs &&
                       cb.certified <= r.rhs && r.lhs <= cb.certified;
    r.witness = "cover t=" + std::to_string(cb.t) + " certified=" + cb.certified.str() +
                (chain ? " chain=ok" : " chain=BROKEN");
    if (!chain) r.status = ReportStatus::kFail;
  }
  return r;
}

VerificationReport verify_fmr(const WeightedGraph& g) {
  auto r = start("fmr", g.graph());
  r.weights = g.weights_string();
  r.lhs = Rational(2) * g.total_weight() / integer(g.graph().order());
  r.rhs = max_weight_path(g);
  finalize(r);
  return r;
}

VerificationReport verify_bondy_fan(const WeightedGraph& g) {
  auto r = start("bondy-fan", g.graph());
  r.weights = g.weights_string();
  if (!is_two_edge_connected(g.graph())) return not_met(r, "not 2-edge-connected");
  r.lhs = Rational(2) * g.total_weight() / integer(g.graph().order() - 1);
  r.rhs = *max_weight_cycle(g);
  finalize(r);
  return r;
}

VerificationReport verify_ning_vpath(const Graph& g, Vertex v) {
  auto r = start("ning", g);
  r.root = v;
  if (!is_connected(g)) return not_met(r, "disconnected");
  if (g.order() < 2) return not_met(r, "n < 2");
  r.lhs = frac(2 * static_cast<std::int64_t>(g.size()) - g.degree(v), g.order() - 1);
  r.rhs = integer(longest_vpath(g, v));
  finalize(r);
  return r;
}

VerificationReport verify_gt_path(const Graph& g, int s) {
  if (s < 2) throw std::invalid_argument("clique order s must be at least 2");
  auto r = start("gt-path", g);
  r.s = s;
  const CliqueStatProfile p = clique_profile(g, s, CliqueStatKind::kConsecutivePath);
  for (int value : p.values) r.lhs += frac(1, value - s + 2);
  r.rhs = frac(static_cast<std::int64_t>(clique_count(g, s - 1)), s);
  finalize(r);
  return r;
}

VerificationReport verify_gt_star(const Graph& g, int s) {
  if (s < 2) throw std::invalid_argument("clique order s must be at least 2");
  auto r = start("gt-star", g);
  r.s = s;
  const CliqueStatProfile strict = clique_profile(g, s, CliqueStatKind::kStar, StarCenterRule::kInClique);
  const CliqueStatProfile loose = clique_profile(g, s, CliqueStatKind::kStar, StarCenterRule::kAnyVertex);
  Rational loose_sum;
  for (std::size_t i = 0; i < strict.values.size(); ++i) {
    r.lhs += frac(1, strict.values[i] - s + 2);
    loose_sum += frac(1, loose.values[i] - s + 2);
  }
  r.rhs = frac(static_cast<std::int64_t>(clique_count(g, s - 1)), s);
  finalize(r);
  if (loose_sum != r.lhs) {
    r.witness = "any-center reading gives " + loose_sum.str() + (loose_sum > r.rhs ? " (exceeds bound)" : "");
  }
  return r;
}

VerificationReport verify_star_prop(const Graph& g) {
  auto r = start("star", g);
  const EdgeStatProfile st = edge_profile(g, StatKind::kStar);
  Rational by_degree;
  for (const Edge& e : g.edges()) by_degree += frac(1, std::max(g.degree(e.u), g.degree(e.v)));
  r.lhs = reciprocal_sum(st.values);
  r.rhs = frac(g.order(), 2);
  finalize(r);
  if (by_degree != r.lhs) {
    r.status = ReportStatus::kFail;
    r.witness = "degree form " + by_degree.str() + " differs from star form";
  }
  witness_on_failure(r, st);
  return r;
}

namespace {

VerificationReport clique_ratio_report(const std::string& id, const Graph& g, int s, int achieved) {
  if (s < 1) throw std::invalid_argument("clique order s must be at least 1");
  auto r = start(id, g);
  r.s = s;
  const std::size_t ns = clique_count(g, s);
  if (ns == 0) return not_met(r, "no clique of order s");
  r.lhs = frac(static_cast<std::int64_t>((s + 1) * clique_count(g, s + 1)), static_cast<std::int64_t>(ns)) +
          integer(s - 1);
  r.rhs = integer(achieved);
  finalize(r);
  return r;
}

}  // namespace

VerificationReport verify_delta_lemma(const Graph& g, int s) {
  return clique_ratio_report("delta", g, s, g.max_degree());
}

VerificationReport verify_ning_peng(const Graph& g, int s) {
  return clique_ratio_report("ning-peng", g, s, longest_path(g));
}

VerificationReport verify_closure_matching(const Graph& g) {
  auto r = start("closure-matching", g);
  const int mu = matching_number(g);
  const ClosureResult closure = k_closure(g, 2 * mu + 1);
  r.lhs = integer(matching_number(closure.closed));
  r.rhs = integer(mu);
  finalize(r);
  if (!r.equality) r.status = ReportStatus::kFail;
  r.witness = "added " + std::to_string(closure.added.size()) + " edges";
  return r;
}

VerificationReport verify_nw_bound(const Graph& g) {
  auto r = start("nw-bound", g);
  const ClosureCliqueBound cb = closure_clique_bound(g);
  if (cb.k < 1) return not_met(r, "edgeless (mu = 0)");
  r.lhs = cb.edges;
  r.rhs = cb.bound;
  finalize(r);
  r.witness = "s=" + std::to_string(cb.s) + " clique=" + set_str(cb.clique);
  if (!cb.holds_for_all_t) {
    r.status = ReportStatus::kFail;
    r.witness += " bound fails for some t in [s, 2k+1]";
  }
  return r;
}

VerificationReport verify_stability(const Graph& g) {
  auto r = start("stability", g);
  const StabilityVerdict sv = stability_check(g);
  if (!sv.hypothesis) return not_met(r, "needs 2n <= 5 mu + 1 and e > 2 mu^2");
  r.lhs = integer(popcount(g.non_isolated()));
  r.rhs = integer(2 * sv.mu + 1);
  finalize(r);
  return r;
}

const std::vector<TheoremInfo>& theorem_catalog() {
  using P = TheoremParam;
  static const std::vector<TheoremInfo> catalog = {
      {"eg-path", P::kNone, "longest path >= 2m/n"},
      {"eg-cycle", P::kNone, "2-edge-connected: longest cycle >= 2m/(n-1)"},
      {"eg-matching", P::kNone, "n >= 2mu+1: e <= max{C(2mu+1,2), C(mu,2)+(n-mu)mu}"},
      {"bbrs", P::kNone, "e <= sum_v l(v)/2, equality iff disjoint cliques"},
      {"mt", P::kNone, "sum 1/p(e) <= n/2"},
      {"zz", P::kNone, "sum 1/c(e) <= (n-1)/2"},
      {"local-bbrs", P::kRoot, "rooted path sum <= (n-1)/2, equality iff clique or cliques sharing v"},
      {"rooted-chain", P::kRoot, "(e - d(v)/2)/l(v) <= rooted path sum"},
      {"local-matching", P::kNone, "sum 1/mu(e) bound with extremal families"},
      {"weighted-mt", P::kWeights, "sum w(e)/w(p(e)) <= n/2"},
      {"fmr", P::kWeights, "heaviest path >= 2w(G)/n"},
      {"bondy-fan", P::kWeights, "2-edge-connected: heaviest cycle >= 2w(G)/(n-1)"},
      {"ning", P::kRoot, "l(v) >= (2e - d(v))/(n-1)"},
      {"gt-path", P::kCliqueOrder, "sum over s-cliques 1/(p(S)-s+2) <= n_{s-1}/s"},
      {"gt-star", P::kCliqueOrder, "sum over s-cliques 1/(s(K)-s+2) <= n_{s-1}/s"},
      {"star", P::kNone, "sum 1/s(e) <= n/2"},
      {"delta", P::kCliqueOrder, "max degree >= (s+1)n_{s+1}/n_s + s - 1"},
      {"ning-peng", P::kCliqueOrder, "longest path >= (s+1)n_{s+1}/n_s + s - 1"},
      {"closure-matching", P::kNone, "mu is unchanged by the (2mu+1)-closure"},
      {"nw-bound", P::kNone, "closure edge count against the clique bound f"},
      {"stability", P::kNone, "2n <= 5mu+1 and e > 2mu^2 force all edges into 2mu+1 vertices"},
  };
  return catalog;
}

const TheoremInfo& theorem_info(const std::string& id) {
  for (const TheoremInfo& info : theorem_catalog()) {
    if (info.id == id) return info;
  }
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

}  // namespace locturan
