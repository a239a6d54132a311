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

#include "path_tables.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace locturan::detail {

void check_path_search_order(const Graph& g) {
  if (g.order() > kMaxPathSearchOrder) {
    throw std::invalid_argument("exact path search supports n <= " + std::to_string(kMaxPathSearchOrder) +
                                ", got " + std::to_string(g.order()));
  }
}

void check_weighted_search_order(const Graph& g) {
  if (g.order() > kMaxWeightedSearchOrder) {
    throw std::invalid_argument("exact weighted path search supports n <= " +
                                std::to_string(kMaxWeightedSearchOrder) + ", got " + std::to_string(g.order()));
  }
}

PathTables::PathTables(const Graph& g) : g_(g), n_(g.order()) {
  check_path_search_order(g);
  const std::size_t masks = std::size_t{1} << n_;
  ends_.assign(masks, 0);
  for (VertexSet mask = 1; mask < masks; ++mask) {
    if (popcount(mask) == 1) {
      ends_[mask] = mask;
      continue;
    }
    VertexSet e = 0;
    for (Vertex v : members(mask)) {
      if (ends_[mask & ~bit(v)] & g.neighbors(v)) e |= bit(v);
    }
    ends_[mask] = e;
  }

  within_.assign(static_cast<std::size_t>(n_) << n_, 0);
  for (Vertex v = 0; v < n_; ++v) {
    std::uint8_t* w = &within_[static_cast<std::size_t>(v) << n_];
    for (VertexSet mask = 0; mask < masks; ++mask) {
      if (contains(ends_[mask], v)) w[mask] = static_cast<std::uint8_t>(popcount(mask));
    }
    // Superset closure of the maximum.
    for (int b = 0; b < n_; ++b) {
      for (VertexSet mask = 0; mask < masks; ++mask) {
        if (contains(mask, b)) w[mask] = std::max(w[mask], w[mask & ~bit(b)]);
      }
    }
  }
}

std::vector<VertexSet> PathTables::rooted_at(Vertex s) const {
  const std::size_t masks = std::size_t{1} << n_;
  std::vector<VertexSet> from(masks, 0);
  from[bit(s)] = bit(s);
  for (VertexSet mask = bit(s) + 1; mask < masks; ++mask) {
    if (!contains(mask, s) || popcount(mask) < 2) continue;
    VertexSet e = 0;
    for (Vertex v : members(mask & ~bit(s))) {
      if (from[mask & ~bit(v)] & g_.neighbors(v)) e |= bit(v);
    }
    from[mask] = e;
  }
  return from;
}

template <typename T>
WeightedPathTables<T>::WeightedPathTables(const Graph& g, const PathTables& plain, std::vector<T> edge_weight)
    : n_(g.order()) {
  check_weighted_search_order(g);
  adj_weight_.assign(static_cast<std::size_t>(n_) * n_, T(-1));
  for (Vertex v = 0; v < n_; ++v) adjacency_[v] = g.neighbors(v);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    adj_weight_[e.u * n_ + e.v] = edge_weight[i];
    adj_weight_[e.v * n_ + e.u] = edge_weight[i];
  }
  const std::size_t masks = std::size_t{1} << n_;
  best_.assign(static_cast<std::size_t>(n_) << n_, T(-1));
  for (VertexSet mask = 1; mask < masks; ++mask) {
    if (popcount(mask) == 1) {
      best_[index(mask, std::countr_zero(mask))] = T(0);
      continue;
    }
    for (Vertex v : members(plain.ends(mask))) {
      const VertexSet rest = mask & ~bit(v);
      T top(-1);
      for (Vertex u : members(plain.ends(rest) & g.neighbors(v))) {
        T cand = best_[index(rest, u)] + weight(u, v);
        if (cand > top) top = std::move(cand);
      }
      best_[index(mask, v)] = std::move(top);
    }
  }
  within_ = best_;
  for (Vertex v = 0; v < n_; ++v) {
    for (int b = 0; b < n_; ++b) {
      for (VertexSet mask = 0; mask < masks; ++mask) {
        if (!contains(mask, b)) continue;
        const T& sub = within_[index(mask & ~bit(b), v)];
        if (sub > within_[index(mask, v)]) within_[index(mask, v)] = sub;
      }
    }
  }
}

template <typename T>
std::vector<T> WeightedPathTables<T>::rooted_at_least(Vertex s, const std::vector<VertexSet>& from_s) const {
  std::vector<T> table(static_cast<std::size_t>(n_) << n_, T(-1));
  table[index(bit(s), s)] = T(0);
  const VertexSet above = full_set(n_) & ~full_set(s + 1);
  // Submasks of `above` in increasing numeric order visit subsets first.
  for (VertexSet sub = (0 - above) & above; sub != 0; sub = (sub - above) & above) {
    const VertexSet mask = sub | bit(s);
    for (Vertex v : members(from_s[mask])) {
      const VertexSet rest = mask & ~bit(v);
      T top(-1);
      for (Vertex u : members(from_s[rest] & adjacency_of(v))) {
        T cand = table[index(rest, u)] + weight(u, v);
        if (cand > top) top = std::move(cand);
      }
      table[index(mask, v)] = std::move(top);
    }
  }
  return table;
}

template class WeightedPathTables<std::int64_t>;
template class WeightedPathTables<BigInt>;

BigInt weight_scale(const WeightedGraph& g) {
  BigInt scale = 1;
  for (const Rational& w : g.weights()) scale = boost::multiprecision::lcm(scale, w.denominator());
  return scale;
}

bool fits_int64(const WeightedGraph& g, const BigInt& scale) {
  BigInt top = 0;
  for (const Rational& w : g.weights()) top = std::max(top, BigInt(w.numerator() * (scale / w.denominator())));
  // A path or cycle has at most n edges.
  return top * (g.graph().order() + 1) < BigInt(std::numeric_limits<std::int64_t>::max() / 2);
}

}  // namespace locturan::detail
