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

#include "locturan/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace locturan {

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  if (a < 0 || b < 0) throw std::invalid_argument("negative vertex id");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string Edge::str() const { return std::to_string(u) + "-" + std::to_string(v); }

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 32]");
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    check_vertex(e.u);
    check_vertex(e.v);
    if (adjacent(e.u, e.v)) throw std::invalid_argument("repeated edge " + e.str());
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
  rebuild_edges();
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

void Graph::rebuild_edges() {
  edges_.clear();
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : members(adj_[u] & ~full_set(u + 1))) edges_.push_back({u, v});
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  if (!has_edge(e)) return std::nullopt;
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::require_edge(const Edge& e) const {
  const auto idx = edge_index(e);
  if (!idx) throw std::invalid_argument("edge " + e.str() + " is not in the graph");
  return *idx;
}

VertexSet Graph::non_isolated() const {
  VertexSet s = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (adj_[v] != 0) s |= bit(v);
  }
  return s;
}

Graph Graph::with_edge(const Edge& e) const {
  check_vertex(e.u);
  check_vertex(e.v);
  Graph g = *this;
  g.adj_[e.u] |= bit(e.v);
  g.adj_[e.v] |= bit(e.u);
  g.rebuild_edges();
  return g;
}

Graph Graph::isolate(VertexSet removed) const {
  Graph g = *this;
  for (Vertex v = 0; v < n_; ++v) {
    g.adj_[v] = contains(removed, v) ? 0 : (g.adj_[v] & ~removed);
  }
  g.rebuild_edges();
  return g;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  Graph g = *this;
  for (const Edge& e : removed) {
    g.adj_[e.u] &= ~bit(e.v);
    g.adj_[e.v] &= ~bit(e.u);
  }
  g.rebuild_edges();
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  const auto kept = members(keep);
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (Vertex w : members(adj_[kept[i]] & keep)) g.adj_[i] |= bit(index[w]);
  }
  g.rebuild_edges();
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  VertexSet seen = 0;
  for (Vertex p : perm) {
    check_vertex(p);
    seen |= bit(p);
  }
  if (seen != vertices()) throw std::invalid_argument("relabeling is not a permutation");
  Graph g(n_);
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex w : members(adj_[v])) g.adj_[perm[v]] |= bit(perm[w]);
  }
  g.rebuild_edges();
  return g;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Graph(a + b, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = disjoint_union(a, b).edges();
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v = 0; v < b.order(); ++v) edges.push_back({u, a.order() + v});
  }
  return Graph(a.order() + b.order(), edges);
}

Graph bowtie() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
  return Graph(5, edges);
}

Graph wheel(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel rim needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= rim; ++v) {
    edges.push_back({0, v});
    edges.push_back(Edge::make(v, v == rim ? 1 : v + 1));
  }
  return Graph(rim + 1, edges);
}

}  // namespace graphs

}  // namespace locturan
