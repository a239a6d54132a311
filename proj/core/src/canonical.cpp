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

#include "locturan/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "locturan/connectivity.hpp"
#include "locturan/graph6.hpp"

namespace locturan {

namespace {

// Column j of the bit string under a partial ordering: bit for row i sits at
// position j-1-i, so numeric order on equal-length columns is lexicographic.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    descend(0, 0);
    std::vector<Vertex> position(n_);
    for (int p = 0; p < n_; ++p) position[best_order_[p]] = p;
    return position;
  }

 private:
  std::uint32_t column(int depth, Vertex x) const {
    std::uint32_t col = 0;
    for (int i = 0; i < depth; ++i) {
      if (g_.adjacent(order_[i], x)) col |= std::uint32_t{1} << (depth - 1 - i);
    }
    return col;
  }

  // -1, 0, +1 comparing the current prefix [0, depth] with the best one.
  int compare_prefix(int depth) const {
    if (!have_best_) return -1;
    for (int i = 0; i <= depth; ++i) {
      if (cols_[i] != best_cols_[i]) return cols_[i] < best_cols_[i] ? -1 : 1;
    }
    return 0;
  }

  void descend(int depth, VertexSet used) {
    if (depth == n_) {
      if (compare_prefix(n_ - 1) < 0) {
        best_cols_ = cols_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::array<std::pair<std::uint32_t, Vertex>, kMaxVertices> cand{};
    int count = 0;
    for (Vertex x : members(g_.vertices() & ~used)) cand[count++] = {column(depth, x), x};
    std::sort(cand.begin(), cand.begin() + count);
    for (int c = 0; c < count; ++c) {
      order_[depth] = cand[c].second;
      cols_[depth] = cand[c].first;
      if (compare_prefix(depth) > 0) break;  // later candidates have larger columns
      descend(depth + 1, used | bit(cand[c].second));
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::array<Vertex, kMaxVertices> order_{};
  std::array<std::uint32_t, kMaxVertices> cols_{};
  std::array<Vertex, kMaxVertices> best_order_{};
  std::array<std::uint32_t, kMaxVertices> best_cols_{};
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

std::string canonical_form(const Graph& g) { return write_graph6(g.relabeled(canonical_labeling(g))); }

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::out_of_range("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                            ", got " + std::to_string(n));
  }
  // Every graph on k vertices is a graph on k-1 vertices plus one vertex, so
  // extending each class representative by every neighbor set is complete.
  std::map<std::string, Graph> level{{canonical_form(Graph(1)), Graph(1)}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [key, base] : level) {
      std::vector<Edge> edges = base.edges();
      const std::size_t base_size = edges.size();
      for (VertexSet nbrs = 0; nbrs < full_set(k - 1) + 1; ++nbrs) {
        edges.resize(base_size);
        for (Vertex v : members(nbrs)) edges.push_back({v, k - 1});
        const Graph h(k, edges);
        std::string form = canonical_form(h);
        if (!next.contains(form)) {
          Graph rep = parse_graph6(form);
          next.emplace(std::move(form), std::move(rep));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) {
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace locturan
