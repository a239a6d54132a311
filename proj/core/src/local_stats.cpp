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

#include "locturan/local_stats.hpp"

#include <algorithm>
#include <stdexcept>

#include "locturan/connectivity.hpp"
#include "locturan/matching.hpp"
#include "path_tables.hpp"

namespace locturan {

using detail::PathTables;

namespace {

// Longest path through u->v oriented so that a path from `left` ends at u and
// the rest starts at v. `left[A]` lists endpoints of Hamilton paths of G[A]
// admissible on the left side. Returns -1 when no such path exists.
template <typename LeftEnds>
int through_oriented(const PathTables& t, Vertex u, Vertex v, LeftEnds&& left) {
  const VertexSet all = t.graph().vertices();
  const VertexSet free = all & ~bit(u) & ~bit(v);
  int best = -1;
  // Enumerate A = sub + u over every subset of the free vertices.
  VertexSet sub = free;
  for (;;) {
    const VertexSet a = sub | bit(u);
    if (contains(left(a), u)) {
      best = std::max(best, popcount(a) + t.longest_within(v, all & ~a) - 1);
    }
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return best;
}

int path_through(const PathTables& t, const Edge& e) {
  auto any_start = [&](VertexSet a) { return t.ends(a); };
  return std::max(through_oriented(t, e.u, e.v, any_start), through_oriented(t, e.v, e.u, any_start));
}

int rooted_path_through(const PathTables& t, const std::vector<VertexSet>& from_root, const Edge& e) {
  auto rooted = [&](VertexSet a) { return from_root[a]; };
  return std::max(through_oriented(t, e.u, e.v, rooted), through_oriented(t, e.v, e.u, rooted));
}

int cycle_through(const std::vector<VertexSet>& from_u, Vertex v) {
  int best = 2;
  for (VertexSet mask = 0; mask < from_u.size(); ++mask) {
    if (popcount(mask) >= 3 && contains(from_u[mask], v)) best = std::max(best, popcount(mask));
  }
  return best;
}

void require_connected_for_root(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("rooted path statistic requires a connected graph");
}

int consecutive_clique_path(const PathTables& t, VertexSet clique) {
  const Graph& g = t.graph();
  const int s = popcount(clique);
  const VertexSet rest = g.vertices() & ~clique;
  const auto block = members(clique);

  // Vertices a path leaving the block at y can use next, restricted to X.
  auto tail = [&](Vertex y, VertexSet x) {
    int top = 0;
    for (Vertex b : members(g.neighbors(y) & x)) top = std::max(top, t.longest_within(b, x));
    return top;
  };

  int best = 0;
  for (Vertex y : block) best = std::max(best, tail(y, rest));
  for (VertexSet a = rest; a != 0; a = (a - 1) & rest) {
    VertexSet entries = 0;
    for (Vertex end : members(t.ends(a))) entries |= g.neighbors(end) & clique;
    if (entries == 0) continue;
    for (Vertex y : block) {
      const bool ok = s == 1 ? contains(entries, y) : (entries & ~bit(y)) != 0;
      if (ok) best = std::max(best, popcount(a) + tail(y, rest & ~a));
    }
  }
  return s - 1 + best;
}

void require_clique(const Graph& g, VertexSet k) {
  if ((k & ~g.vertices()) != 0) throw std::invalid_argument("clique has vertices outside the graph");
  for (Vertex v : members(k)) {
    if ((g.neighbors(v) & k) != (k & ~bit(v))) throw std::invalid_argument("vertex set is not a clique");
  }
}

void extend_cliques(const Graph& g, VertexSet current, VertexSet candidates, int need, std::vector<VertexSet>& out) {
  if (need == 0) {
    out.push_back(current);
    return;
  }
  for (Vertex v : members(candidates)) {
    if (popcount(candidates >> v) < need) break;
    extend_cliques(g, current | bit(v), candidates & g.neighbors(v) & ~full_set(v + 1), need - 1, out);
  }
}

}  // namespace

int longest_path(const Graph& g) {
  const PathTables t(g);
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, t.longest_within(v, g.vertices()) - 1);
  return best;
}

int longest_path_through_edge(const Graph& g, const Edge& e) {
  g.require_edge(e);
  return path_through(PathTables(g), e);
}

int longest_cycle_through_edge(const Graph& g, const Edge& e) {
  g.require_edge(e);
  return cycle_through(PathTables(g).rooted_at(e.u), e.v);
}

int longest_vpath(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  return std::max(0, PathTables(g).longest_within(v, g.vertices()) - 1);
}

int longest_vpath_through_edge(const Graph& g, Vertex v, const Edge& e) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  require_connected_for_root(g);
  g.require_edge(e);
  const PathTables t(g);
  return rooted_path_through(t, t.rooted_at(v), e);
}

Rational max_weight_path(const WeightedGraph& g) {
  const PathTables t(g.graph());
  return detail::with_weighted_tables(g, t, [&](const auto& wt, const BigInt& scale) {
    using T = std::decay_t<decltype(wt.best(0, 0))>;
    T top(0);
    for (Vertex v = 0; v < g.graph().order(); ++v) {
      const T& cand = wt.best_within(v, g.graph().vertices());
      if (cand > top) top = cand;
    }
    return detail::unscale(top, scale);
  });
}

std::optional<Rational> max_weight_cycle(const WeightedGraph& g) {
  const Graph& graph = g.graph();
  const PathTables t(graph);
  return detail::with_weighted_tables(g, t, [&](const auto& wt, const BigInt& scale) -> std::optional<Rational> {
    using T = std::decay_t<decltype(wt.best(0, 0))>;
    std::optional<T> top;
    // Each cycle is counted once from its least vertex s: a Hamilton path of
    // G[mask] from s to a neighbor x of s, closed by the edge xs.
    for (Vertex s = 0; s < graph.order(); ++s) {
      const auto from = t.rooted_at(s);
      const auto table = wt.rooted_at_least(s, from);
      const VertexSet above = graph.vertices() & ~full_set(s + 1);
      for (VertexSet sub = above; sub != 0; sub = (sub - 1) & above) {
        const VertexSet mask = sub | bit(s);
        if (popcount(mask) < 3) continue;
        for (Vertex x : members(from[mask] & graph.neighbors(s))) {
          const T& open = wt.rooted(table, mask, x);
          if (open < T(0)) continue;
          T cand = open + wt.weight(x, s);
          if (!top || cand > *top) top = std::move(cand);
        }
      }
    }
    if (!top) return std::nullopt;
    return detail::unscale(*top, scale);
  });
}

namespace {

template <typename Tables>
auto weighted_through(const PathTables& t, const Tables& wt, const Edge& e) {
  using T = std::decay_t<decltype(wt.best(0, 0))>;
  const VertexSet all = t.graph().vertices();
  T top(-1);
  for (const auto& [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    const VertexSet free = all & ~bit(u) & ~bit(v);
    VertexSet sub = free;
    for (;;) {
      const VertexSet a = sub | bit(u);
      if (contains(t.ends(a), u)) {
        T cand = wt.best(a, u) + wt.weight(u, v) + wt.best_within(v, all & ~a);
        if (cand > top) top = std::move(cand);
      }
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return top;
}

}  // namespace

Rational max_weight_path_through_edge(const WeightedGraph& g, const Edge& e) {
  g.graph().require_edge(e);
  const PathTables t(g.graph());
  return detail::with_weighted_tables(
      g, t, [&](const auto& wt, const BigInt& scale) { return detail::unscale(weighted_through(t, wt, e), scale); });
}

int star_size_through_edge(const Graph& g, const Edge& e) {
  g.require_edge(e);
  // A star containing uv is centered at u or v and may take every edge there.
  return std::max(popcount(g.neighbors(e.u)), popcount(g.neighbors(e.v)));
}

int max_matching_containing_edge(const Graph& g, const Edge& e) {
  g.require_edge(e);
  return 1 + matching_number(g.isolate(e.ends()));
}

std::vector<Edge> f_edge_set(const Graph& g) {
  const int mu = matching_number(g);
  if (mu < 1) throw std::invalid_argument("F is defined only when the matching number is at least 1");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (max_matching_containing_edge(g, e) == mu - 1) out.push_back(e);
  }
  return out;
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("clique order must be nonnegative");
  std::vector<VertexSet> out;
  extend_cliques(g, 0, g.vertices(), s, out);
  return out;
}

std::size_t clique_count(const Graph& g, int s) { return enumerate_cliques(g, s).size(); }

int clique_number(const Graph& g) {
  int s = 0;
  while (s < g.order() && clique_count(g, s + 1) > 0) ++s;
  return s;
}

int longest_path_with_consecutive_clique(const Graph& g, VertexSet clique) {
  require_clique(g, clique);
  if (clique == 0) throw std::invalid_argument("clique must be nonempty");
  return consecutive_clique_path(PathTables(g), clique);
}

int max_star_over_clique(const Graph& g, VertexSet clique, StarCenterRule rule) {
  require_clique(g, clique);
  if (clique == 0) throw std::invalid_argument("clique must be nonempty");
  int best = 0;
  for (Vertex c = 0; c < g.order(); ++c) {
    const bool inside = contains(clique, c);
    const bool admissible = inside || (rule == StarCenterRule::kAnyVertex && (g.neighbors(c) & clique) == clique);
    if (admissible) best = std::max(best, g.degree(c));
  }
  return best;
}

std::string to_string(StatKind kind) {
  switch (kind) {
    case StatKind::kPath: return "p";
    case StatKind::kCycle: return "c";
    case StatKind::kRootedPath: return "p_v";
    case StatKind::kMatching: return "mu";
    case StatKind::kStar: return "s";
  }
  return "?";
}

StatKind parse_stat_kind(const std::string& text) {
  for (StatKind k : {StatKind::kPath, StatKind::kCycle, StatKind::kRootedPath, StatKind::kMatching, StatKind::kStar}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown statistic '" + text + "' (expected p, c, p_v, mu or s)");
}

EdgeStatProfile edge_profile(const Graph& g, StatKind kind, std::optional<Vertex> root) {
  EdgeStatProfile out;
  out.kind = kind;
  out.edges = g.edges();
  out.values.reserve(g.size());
  switch (kind) {
    case StatKind::kPath: {
      const PathTables t(g);
      for (const Edge& e : g.edges()) out.values.push_back(path_through(t, e));
      break;
    }
    case StatKind::kCycle: {
      const PathTables t(g);
      Vertex cached = -1;
      std::vector<VertexSet> from;
      for (const Edge& e : g.edges()) {
        if (e.u != cached) {
          from = t.rooted_at(e.u);
          cached = e.u;
        }
        out.values.push_back(cycle_through(from, e.v));
      }
      break;
    }
    case StatKind::kRootedPath: {
      if (!root) throw std::invalid_argument("p_v profile needs a root vertex");
      if (*root < 0 || *root >= g.order()) throw std::invalid_argument("root out of range");
      require_connected_for_root(g);
      out.root = root;
      const PathTables t(g);
      const auto from = t.rooted_at(*root);
      for (const Edge& e : g.edges()) out.values.push_back(rooted_path_through(t, from, e));
      break;
    }
    case StatKind::kMatching:
      for (const Edge& e : g.edges()) out.values.push_back(max_matching_containing_edge(g, e));
      break;
    case StatKind::kStar:
      for (const Edge& e : g.edges()) out.values.push_back(star_size_through_edge(g, e));
      break;
  }
  return out;
}

WeightedEdgeProfile weighted_path_profile(const WeightedGraph& g) {
  WeightedEdgeProfile out;
  out.edges = g.graph().edges();
  if (out.edges.empty()) return out;
  const PathTables t(g.graph());
  detail::with_weighted_tables(g, t, [&](const auto& wt, const BigInt& scale) {
    for (const Edge& e : out.edges) out.values.push_back(detail::unscale(weighted_through(t, wt, e), scale));
    return 0;
  });
  return out;
}

CliqueStatProfile clique_profile(const Graph& g, int s, CliqueStatKind kind, StarCenterRule rule) {
  CliqueStatProfile out;
  out.kind = kind;
  out.s = s;
  out.cliques = enumerate_cliques(g, s);
  if (kind == CliqueStatKind::kConsecutivePath) {
    if (out.cliques.empty()) return out;
    const PathTables t(g);
    for (VertexSet k : out.cliques) out.values.push_back(consecutive_clique_path(t, k));
  } else {
    for (VertexSet k : out.cliques) out.values.push_back(max_star_over_clique(g, k, rule));
  }
  return out;
}

}  // namespace locturan
