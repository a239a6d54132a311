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

#include "locturan/matching_structure.hpp"

#include <algorithm>

#include "locturan/connectivity.hpp"
#include "locturan/matching.hpp"

namespace locturan {

bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return n == 0;
  for (Vertex v = 0; v < n; ++v) {
    if (matching_number(g.isolate(bit(v))) != (n - 1) / 2) return false;
  }
  return true;
}

std::string check_gallai_edmonds(const Graph& g, const GEDecomposition& ge, const std::vector<Edge>& m) {
  if ((ge.c & ge.a) || (ge.c & ge.d) || (ge.a & ge.d) || (ge.c | ge.a | ge.d) != g.vertices()) {
    return "C, A, D do not partition V";
  }
  for (VertexSet comp : ge.d_components) {
    if (!is_factor_critical(g.induced(comp))) return "a component of G[D] is not factor-critical";
  }
  const auto mate = mates(g, m);
  for (Vertex v : members(ge.c)) {
    if (mate[v] < 0 || !contains(ge.c, mate[v])) return "matching is not perfect on C";
  }
  for (VertexSet comp : ge.d_components) {
    int inside = 0;
    for (const Edge& e : m) inside += (e.ends() & comp) == e.ends();
    if (2 * inside != popcount(comp) - 1) return "matching is not near-perfect on a D component";
  }
  VertexSet hit = 0;
  for (Vertex a : members(ge.a)) {
    if (mate[a] < 0 || !contains(ge.d, mate[a])) return "a vertex of A is not matched into D";
    const auto comp = std::find_if(ge.d_components.begin(), ge.d_components.end(),
                                   [&](VertexSet c) { return contains(c, mate[a]); });
    const auto idx = static_cast<int>(comp - ge.d_components.begin());
    if (contains(hit, idx)) return "two vertices of A are matched into the same D component";
    hit |= bit(idx);
  }
  return {};
}

GEDecomposition gallai_edmonds(const Graph& g) {
  const int mu = matching_number(g);
  GEDecomposition ge;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (matching_number(g.isolate(bit(v))) == mu) ge.d |= bit(v);
  }
  for (Vertex v : members(ge.d)) ge.a |= g.neighbors(v);
  ge.a &= ~ge.d;
  ge.c = g.vertices() & ~ge.a & ~ge.d;
  for (VertexSet comp : connected_components(g.induced(ge.d))) {
    // Map induced labels back to original vertex ids.
    const auto original = members(ge.d);
    VertexSet mapped = 0;
    for (Vertex i : members(comp)) mapped |= bit(original[i]);
    ge.d_components.push_back(mapped);
  }
  std::sort(ge.d_components.begin(), ge.d_components.end(),
            [](VertexSet x, VertexSet y) { return std::countr_zero(x) < std::countr_zero(y); });
  if (const std::string why = check_gallai_edmonds(g, ge, max_matching(g)); !why.empty()) {
    throw StructureCheckError("Gallai-Edmonds re-verification failed: " + why);
  }
  return ge;
}

ClosureResult k_closure(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("closure threshold must be nonnegative");
  ClosureResult out{g, {}, k};
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex u = 0; u < g.order() && !changed; ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (out.closed.adjacent(u, v) || out.closed.degree(u) + out.closed.degree(v) < k) continue;
        out.closed = out.closed.with_edge({u, v});
        out.added.push_back({u, v});
        changed = true;
        break;
      }
    }
  }
  return out;
}

bool closure_preserves_matching_number(const Graph& g) {
  const int mu = matching_number(g);
  return matching_number(k_closure(g, 2 * mu + 1).closed) == mu;
}

Rational nw_bound(int s, int k, int n) {
  if (s < 0 || s > n) throw std::invalid_argument("nw_bound needs 0 <= s <= n");
  const std::int64_t ss = s;
  return Rational(ss * (ss - 1) / 2 + (2 * std::int64_t{k} - ss + 1) * (std::int64_t{n} - ss));
}

namespace {

// Largest clique containing `base` (a clique); ties go to the lexicographically
// least sorted member list.
VertexSet largest_clique_containing(const Graph& g, VertexSet base) {
  VertexSet common = g.vertices() & ~base;
  for (Vertex v : members(base)) common &= g.neighbors(v);
  VertexSet best = base;
  auto lex_less = [](VertexSet x, VertexSet y) { return members(x) < members(y); };
  auto grow = [&](auto&& self, VertexSet current, VertexSet candidates) -> void {
    if (popcount(current) > popcount(best) || (popcount(current) == popcount(best) && lex_less(current, best))) {
      best = current;
    }
    for (Vertex v : members(candidates)) {
      if (popcount(current) + popcount(candidates >> v) < popcount(best)) break;
      self(self, current | bit(v), candidates & g.neighbors(v) & ~full_set(v + 1));
    }
  };
  grow(grow, base, common);
  return best;
}

}  // namespace

ClosureCliqueBound closure_clique_bound(const Graph& g) {
  ClosureCliqueBound out;
  out.k = matching_number(g);
  const int k = out.k;
  const int n = g.order();
  out.closure = k_closure(g, 2 * k + 1).closed;
  for (Vertex v = 0; v < n; ++v) {
    if (out.closure.degree(v) >= k + 1) out.high_degree |= bit(v);
  }
  // Two vertices of degree >= k+1 have degree sum >= 2k+1, so the closure
  // joined them: high_degree is a clique.
  out.clique = largest_clique_containing(out.closure, out.high_degree);
  out.s = popcount(out.clique);
  out.edges = Rational(static_cast<std::int64_t>(out.closure.size()));
  if (out.s <= k) {
    out.bound = nw_bound(std::min(k, n), k, n);
    return out;
  }
  out.bound = max(nw_bound(out.s, k, n), nw_bound(std::min(k + 1, n), k, n));
  for (int t = out.s; t <= std::min(2 * k + 1, n); ++t) {
    if (out.edges > max(nw_bound(t, k, n), nw_bound(std::min(k + 1, n), k, n))) out.holds_for_all_t = false;
  }
  return out;
}

StabilityVerdict stability_check(const Graph& g) {
  StabilityVerdict out;
  out.mu = matching_number(g);
  const std::int64_t mu = out.mu;
  out.hypothesis = 2 * std::int64_t{g.order()} <= 5 * mu + 1 && static_cast<std::int64_t>(g.size()) > 2 * mu * mu;
  out.conclusion = popcount(g.non_isolated()) <= 2 * mu + 1;
  return out;
}

}  // namespace locturan
