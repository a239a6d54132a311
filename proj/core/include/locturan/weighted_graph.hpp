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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/rational.hpp"

namespace locturan {

/// A graph with one nonnegative exact weight per edge, indexed like
/// Graph::edges().
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(Graph graph, std::vector<Rational> weights);

  /// Every edge weighted 1.
  static WeightedGraph unit(const Graph& graph);

  const Graph& graph() const { return graph_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t edge_index) const { return weights_[edge_index]; }
  const Rational& weight(const Edge& e) const { return weights_[graph_.require_edge(e)]; }

  Rational total_weight() const;
  /// Sum of edge weights along the vertex sequence; consecutive vertices must
  /// be adjacent.
  Rational path_weight(std::span<const Vertex> walk) const;

  /// Comma-separated weights in edge order, used to identify a weighting in
  /// reports.
  std::string weights_string() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  Graph graph_;
  std::vector<Rational> weights_;
};

/// Draws weights a/b with a in [0, 9] and b in [1, 4]. Raw engine output is
/// reduced modulo the range (no std distributions), so a seed replays the same
/// weights on every standard library.
class WeightSampler {
 public:
  explicit WeightSampler(std::uint64_t seed);
  WeightedGraph sample(const Graph& graph);

 private:
  std::mt19937_64 engine_;
};

/// Plain-text weighted graph: a header line "n m" followed by m lines
/// "u v p/q" with 0-based vertex ids. Blank lines and '#' comments are skipped.
/// Returns nullopt at clean end of input; throws std::invalid_argument on
/// malformed records.
std::optional<WeightedGraph> read_weighted_graph(std::istream& in);
void write_weighted_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace locturan
