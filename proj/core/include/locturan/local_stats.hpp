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

#include <optional>
#include <string>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/rational.hpp"
#include "locturan/weighted_graph.hpp"

namespace locturan {

// Lengths count edges. The path statistics run an exact subset DP and accept
// graphs with n <= 20 (weighted: n <= 16); larger inputs throw
// std::invalid_argument.

int longest_path(const Graph& g);

/// p(e): longest path whose edge set contains e.
int longest_path_through_edge(const Graph& g, const Edge& e);

/// c(e): longest cycle through e, or 2 when e lies on no cycle.
int longest_cycle_through_edge(const Graph& g, const Edge& e);

/// l(v): longest path with endpoint v (0 for an isolated vertex).
int longest_vpath(const Graph& g, Vertex v);

/// p_v(e): longest path starting at v that uses e. Requires g connected.
int longest_vpath_through_edge(const Graph& g, Vertex v, const Edge& e);

Rational max_weight_path(const WeightedGraph& g);
/// nullopt when g has no cycle.
std::optional<Rational> max_weight_cycle(const WeightedGraph& g);
/// w(p(e)); never below w(e).
Rational max_weight_path_through_edge(const WeightedGraph& g, const Edge& e);

/// s(e): edges in a largest star containing e, i.e. the larger endpoint degree.
int star_size_through_edge(const Graph& g, const Edge& e);

/// mu(e) = 1 + mu(G - u - v).
int max_matching_containing_edge(const Graph& g, const Edge& e);

/// F = { e : mu(e) = mu(G) - 1 }, in edge order. Requires mu(G) >= 1.
std::vector<Edge> f_edge_set(const Graph& g);

/// N_s(G): every s-subset inducing a complete graph, in lexicographic order of
/// sorted member lists. s = 0 yields the single empty clique.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int s);
std::size_t clique_count(const Graph& g, int s);
int clique_number(const Graph& g);

/// p(S): longest path in which the clique S occupies |S| consecutive
/// positions, in any internal order. At least |S| - 1.
int longest_path_with_consecutive_clique(const Graph& g, VertexSet clique);

enum class StarCenterRule {
  kInClique,   ///< the star's center is a member of K
  kAnyVertex,  ///< any center whose closed neighborhood covers K
};

/// s(K): edges in a largest star whose vertex set contains the clique K.
int max_star_over_clique(const Graph& g, VertexSet clique, StarCenterRule rule);

enum class StatKind { kPath, kCycle, kRootedPath, kMatching, kStar };

std::string to_string(StatKind kind);
/// Accepts "p", "c", "p_v", "mu", "s"; throws std::invalid_argument otherwise.
StatKind parse_stat_kind(const std::string& text);

/// One statistic evaluated on every edge, sharing DP tables across edges.
struct EdgeStatProfile {
  StatKind kind = StatKind::kPath;
  std::optional<Vertex> root;  ///< set only for kRootedPath
  std::vector<Edge> edges;
  std::vector<int> values;
};

/// `root` is required for kRootedPath and ignored otherwise.
EdgeStatProfile edge_profile(const Graph& g, StatKind kind, std::optional<Vertex> root = std::nullopt);

/// w(p(e)) on every edge.
struct WeightedEdgeProfile {
  std::vector<Edge> edges;
  std::vector<Rational> values;
};

WeightedEdgeProfile weighted_path_profile(const WeightedGraph& g);

enum class CliqueStatKind { kConsecutivePath, kStar };

struct CliqueStatProfile {
  CliqueStatKind kind = CliqueStatKind::kConsecutivePath;
  int s = 0;
  std::vector<VertexSet> cliques;
  std::vector<int> values;
};

CliqueStatProfile clique_profile(const Graph& g, int s, CliqueStatKind kind,
                                 StarCenterRule rule = StarCenterRule::kInClique);

}  // namespace locturan
