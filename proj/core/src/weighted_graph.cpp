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

#include "locturan/weighted_graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace locturan {

WeightedGraph::WeightedGraph(Graph graph, std::vector<Rational> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (weights_.size() != graph_.size()) {
    throw std::invalid_argument("expected " + std::to_string(graph_.size()) + " weights, got " +
                                std::to_string(weights_.size()));
  }
  for (const Rational& w : weights_) {
    if (w.is_negative()) throw std::invalid_argument("negative edge weight " + w.str());
  }
}

WeightedGraph WeightedGraph::unit(const Graph& graph) {
  return WeightedGraph(graph, std::vector<Rational>(graph.size(), Rational(1)));
}

Rational WeightedGraph::total_weight() const {
  Rational sum;
  for (const Rational& w : weights_) sum += w;
  return sum;
}

Rational WeightedGraph::path_weight(std::span<const Vertex> walk) const {
  Rational sum;
  for (std::size_t i = 1; i < walk.size(); ++i) sum += weight(Edge::make(walk[i - 1], walk[i]));
  return sum;
}

std::string WeightedGraph::weights_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += weights_[i].str();
  }
  return out;
}

WeightSampler::WeightSampler(std::uint64_t seed) : engine_(seed) {}

WeightedGraph WeightSampler::sample(const Graph& graph) {
  std::vector<Rational> weights;
  weights.reserve(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto num = static_cast<std::int64_t>(engine_() % 10);
    const auto den = static_cast<std::int64_t>(engine_() % 4) + 1;
    weights.emplace_back(num, den);
  }
  return WeightedGraph(graph, std::move(weights));
}

namespace {

bool next_record_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

std::optional<WeightedGraph> read_weighted_graph(std::istream& in) {
  std::string line;
  if (!next_record_line(in, line)) return std::nullopt;
  std::istringstream header(line);
  int n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("malformed weighted-graph header: '" + line + "'");
  }
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, Rational>> weighted;
  for (long long i = 0; i < m; ++i) {
    if (!next_record_line(in, line)) throw std::invalid_argument("weighted graph truncated after " + std::to_string(i) + " edges");
    std::istringstream row(line);
    int u = -1;
    int v = -1;
    std::string w;
    std::string extra;
    if (!(row >> u >> v >> w) || (row >> extra)) throw std::invalid_argument("malformed edge line: '" + line + "'");
    const Edge e = Edge::make(u, v);
    edges.push_back(e);
    weighted.emplace_back(e, Rational::parse(w));
  }
  Graph g(n, edges);
  std::vector<Rational> weights(g.size());
  for (const auto& [e, w] : weighted) weights[g.require_edge(e)] = w;
  return WeightedGraph(std::move(g), std::move(weights));
}

void write_weighted_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.graph().order() << ' ' << g.graph().size() << '\n';
  for (std::size_t i = 0; i < g.graph().size(); ++i) {
    const Edge& e = g.graph().edges()[i];
    out << e.u << ' ' << e.v << ' ' << g.weight(i) << '\n';
  }
}

}  // namespace locturan
