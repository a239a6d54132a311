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

#include "locturan/connectivity.hpp"

#include <algorithm>
#include <array>

namespace locturan {

VertexSet component_of(const Graph& g, Vertex v) {
  VertexSet seen = bit(v);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (Vertex x : members(frontier)) next |= g.neighbors(x);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left != 0) {
    const VertexSet c = component_of(g, std::countr_zero(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

// Lowpoint DFS (Hopcroft-Tarjan) recording articulation points and bridges.
struct LowpointDfs {
  explicit LowpointDfs(const Graph& graph) : g(graph) {
    disc.fill(-1);
    for (Vertex r = 0; r < g.order(); ++r) {
      if (disc[r] >= 0) continue;
      int root_children = 0;
      visit(r, -1, root_children);
      if (root_children >= 2) articulation |= bit(r);
    }
    std::sort(bridges.begin(), bridges.end());
  }

  void visit(Vertex v, Vertex parent, int& root_children) {
    disc[v] = low[v] = timer++;
    for (Vertex w : members(g.neighbors(v))) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      if (parent < 0) ++root_children;
      visit(w, v, root_children);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) articulation |= bit(v);
      if (low[w] > disc[v]) bridges.push_back(Edge::make(v, w));
    }
  }

  const Graph& g;
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  int timer = 0;
  VertexSet articulation = 0;
  std::vector<Edge> bridges;
};

}  // namespace

VertexSet cut_vertices(const Graph& g) { return LowpointDfs(g).articulation; }

BridgeDecomposition cut_edges_and_2ec_pieces(const Graph& g) {
  BridgeDecomposition out;
  out.cut_edges = LowpointDfs(g).bridges;
  out.pieces = connected_components(g.without_edges(out.cut_edges));
  return out;
}

bool is_two_edge_connected(const Graph& g) {
  return g.order() >= 2 && is_connected(g) && LowpointDfs(g).bridges.empty();
}

}  // namespace locturan
