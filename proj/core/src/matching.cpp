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

#include "locturan/matching.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace locturan {

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(g.order()) {
    match_.fill(-1);
    // Greedy start; augmentation fixes any suboptimal choice.
    for (const Edge& e : g.edges()) {
      if (match_[e.u] < 0 && match_[e.v] < 0) {
        match_[e.u] = e.v;
        match_[e.v] = e.u;
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (Vertex u = augmenting_path_end(v); u >= 0;) {
        const Vertex pv = parent_[u];
        const Vertex next = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = next;
      }
    }
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] > v) out.push_back({v, match_[v]});
    }
    return out;
  }

 private:
  Vertex lca(Vertex a, Vertex b) const {
    VertexSet seen = 0;
    for (;;) {
      a = base_[a];
      seen |= bit(a);
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (contains(seen, b)) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child, VertexSet& in_blossom) {
    while (base_[v] != b) {
      in_blossom |= bit(base_[v]) | bit(base_[match_[v]]);
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex augmenting_path_end(Vertex root) {
    parent_.fill(-1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    VertexSet used = bit(root);
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : members(g_.neighbors(v))) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          const Vertex cur = lca(v, to);
          VertexSet in_blossom = 0;
          mark_path(v, cur, to, in_blossom);
          mark_path(to, cur, v, in_blossom);
          for (Vertex i = 0; i < n_; ++i) {
            if (!contains(in_blossom, base_[i])) continue;
            base_[i] = cur;
            if (!contains(used, i)) {
              used |= bit(i);
              queue.push_back(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used |= bit(match_[to]);
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::array<Vertex, kMaxVertices> match_{};
  std::array<Vertex, kMaxVertices> parent_{};
  std::array<Vertex, kMaxVertices> base_{};
};

}  // namespace

std::vector<Edge> max_matching(const Graph& g) { return Blossom(g).edges(); }

int matching_number(const Graph& g) { return static_cast<int>(max_matching(g).size()); }

std::vector<Vertex> mates(const Graph& g, const std::vector<Edge>& matching) {
  std::vector<Vertex> mate(g.order(), -1);
  for (const Edge& e : matching) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

}  // namespace locturan
