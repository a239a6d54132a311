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

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace locturan {

using Vertex = int;
/// Bit i set means vertex i is a member.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
inline constexpr int popcount(VertexSet s) { return std::popcount(s); }
inline constexpr VertexSet full_set(int n) { return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Ascending list of the members of `s`.
std::vector<Vertex> members(VertexSet s);

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalizes endpoint order; throws std::invalid_argument on a loop.
  static Edge make(Vertex a, Vertex b);

  VertexSet ends() const { return bit(u) | bit(v); }
  bool incident_to(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  std::string str() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on at most 32 vertices.
///
/// Adjacency is held as one neighbor bitset per vertex; the edge list is kept
/// in lexicographic (u, v) order and is what edge-indexed maps refer to.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  VertexSet vertices() const { return full_set(n_); }

  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  int max_degree() const;
  bool adjacent(Vertex a, Vertex b) const { return contains(adj_[a], b); }
  bool has_edge(const Edge& e) const { return e.u < n_ && e.v < n_ && adjacent(e.u, e.v); }

  const std::vector<Edge>& edges() const { return edges_; }
  /// Position of `e` in edges(), or nullopt when e is not an edge.
  std::optional<std::size_t> edge_index(const Edge& e) const;
  /// Like edge_index but throws std::invalid_argument for non-edges.
  std::size_t require_edge(const Edge& e) const;

  /// Vertices with at least one neighbor.
  VertexSet non_isolated() const;

  Graph with_edge(const Edge& e) const;
  /// Same vertex set with every edge touching `removed` deleted.
  Graph isolate(VertexSet removed) const;
  Graph without_edges(std::span<const Edge> removed) const;
  /// Subgraph induced by `keep`, relabeled 0..k-1 in ascending vertex order.
  Graph induced(VertexSet keep) const;
  /// Graph whose vertex perm[v] is adjacent to perm[w] iff v ~ w here.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void rebuild_edges();
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::vector<Edge> edges_;
};

namespace graphs {

Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
/// Vertices of `b` are shifted past those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
/// Two triangles sharing vertex 0.
Graph bowtie();
/// Hub 0 adjacent to every vertex of the cycle 1..rim.
Graph wheel(int rim);

}  // namespace graphs

}  // namespace locturan
