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
#include <cstdint>
#include <optional>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/weighted_graph.hpp"

namespace locturan::detail {

inline constexpr int kMaxPathSearchOrder = 20;
inline constexpr int kMaxWeightedSearchOrder = 16;

/// Throws std::invalid_argument past the subset-DP size limits.
void check_path_search_order(const Graph& g);
void check_weighted_search_order(const Graph& g);

/// Subset DP over vertex sets. ends(X) holds every vertex that is an endpoint
/// of a Hamilton path of G[X]; longest_within(v, Y) is the largest |X| with
/// X a subset of Y and v in ends(X), or 0 when v is not in Y.
class PathTables {
 public:
  explicit PathTables(const Graph& g);

  const Graph& graph() const { return g_; }
  VertexSet ends(VertexSet mask) const { return ends_[mask]; }
  int longest_within(Vertex v, VertexSet allowed) const {
    return within_[(static_cast<std::size_t>(v) << n_) | allowed];
  }

  /// Table over masks: endpoints of Hamilton paths of G[mask] that start at s.
  std::vector<VertexSet> rooted_at(Vertex s) const;

 private:
  Graph g_;
  int n_;
  std::vector<VertexSet> ends_;
  std::vector<std::uint8_t> within_;
};

/// Weights scaled by the lcm of their denominators so the DP runs on
/// integers; T is std::int64_t when the scaled path weights provably fit and
/// BigInt otherwise.
template <typename T>
struct ScaledWeights {
  std::vector<T> by_edge;  // indexed like Graph::edges()
  BigInt scale;
};

/// Max-weight analogue of PathTables. best(mask, v) is the largest weight of
/// a Hamilton path of G[mask] ending at v (-1 when none exists).
template <typename T>
class WeightedPathTables {
 public:
  WeightedPathTables(const Graph& g, const PathTables& plain, std::vector<T> edge_weight);

  const T& best(VertexSet mask, Vertex v) const { return best_[index(mask, v)]; }
  /// Largest weight of a path with endpoint v inside `allowed`; -1 if v is
  /// not in `allowed`.
  const T& best_within(Vertex v, VertexSet allowed) const { return within_[index(allowed, v)]; }
  const T& weight(Vertex a, Vertex b) const { return adj_weight_[a * n_ + b]; }

  /// Like best() but only for paths starting at s; entries for masks whose
  /// least member is not s are left at -1.
  std::vector<T> rooted_at_least(Vertex s, const std::vector<VertexSet>& from_s) const;
  const T& rooted(const std::vector<T>& table, VertexSet mask, Vertex v) const { return table[index(mask, v)]; }

 private:
  std::size_t index(VertexSet mask, Vertex v) const { return (static_cast<std::size_t>(v) << n_) | mask; }

  VertexSet adjacency_of(Vertex v) const { return adjacency_[v]; }

  int n_;
  std::array<VertexSet, kMaxVertices> adjacency_{};
  std::vector<T> adj_weight_;
  std::vector<T> best_;
  std::vector<T> within_;
};

extern template class WeightedPathTables<std::int64_t>;
extern template class WeightedPathTables<BigInt>;

BigInt weight_scale(const WeightedGraph& g);
bool fits_int64(const WeightedGraph& g, const BigInt& scale);

/// Chooses the integer type for `g`'s weights and invokes fn(tables, scale).
template <typename Fn>
auto with_weighted_tables(const WeightedGraph& g, const PathTables& plain, Fn&& fn) {
  const BigInt scale = weight_scale(g);
  if (fits_int64(g, scale)) {
    std::vector<std::int64_t> w;
    w.reserve(g.weights().size());
    for (const Rational& r : g.weights()) w.push_back(static_cast<std::int64_t>(r.numerator() * (scale / r.denominator())));
    return fn(WeightedPathTables<std::int64_t>(g.graph(), plain, std::move(w)), scale);
  }
  std::vector<BigInt> w;
  w.reserve(g.weights().size());
  for (const Rational& r : g.weights()) w.push_back(r.numerator() * (scale / r.denominator()));
  return fn(WeightedPathTables<BigInt>(g.graph(), plain, std::move(w)), scale);
}

template <typename T>
Rational unscale(const T& value, const BigInt& scale) {
  return Rational(BigInt(value), scale);
}

}  // namespace locturan::detail
