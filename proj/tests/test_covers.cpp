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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "locturan/covers.hpp"
#include "locturan/graph6.hpp"
#include "locturan/local_stats.hpp"
#include "support.hpp"

using namespace locturan;
using testing_support::graphs_up_to;

namespace {

void expect_small_cover(const Graph& g) {
  const PathDoubleCover cover = find_spdc(g);
  const PdcVerdict v = validate_pdc(g, cover);
  ASSERT_TRUE(v.valid) << write_graph6(g) << ": " << (v.problems.empty() ? "" : v.problems.front());
  ASSERT_TRUE(v.small) << write_graph6(g) << " used " << cover.paths.size() << " paths";
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::generate_canonical<double, 53>(rng) < density) edges.push_back(Edge::make(u, v));
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST(Spdc, KnownValues) {
  const auto k2 = find_spdc(graphs::complete(2));
  EXPECT_EQ(k2.paths, (std::vector<VertexPath>{{0, 1}, {0, 1}}));

  const Graph k3 = graphs::complete(3);
  const auto k3c = find_spdc(k3);
  EXPECT_LE(k3c.paths.size(), 3U);
  EXPECT_TRUE(validate_pdc(k3, k3c).valid);

  const PathDoubleCover by_hand{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  EXPECT_TRUE(validate_pdc(k3, by_hand).valid);

  const auto twice = validate_pdc(k3, PathDoubleCover{{{0, 1, 2}, {0, 1, 2}}});
  EXPECT_FALSE(twice.valid);
  EXPECT_EQ(twice.coverage, (std::vector<int>{2, 0, 2}));  // edges 01, 02, 12

  EXPECT_FALSE(validate_pdc(k3, PathDoubleCover{{{0, 1, 2, 0}, {0, 1, 2, 0}}}).valid);
  EXPECT_FALSE(validate_pdc(graphs::path(3), PathDoubleCover{{{0, 2}, {0, 2}}}).valid);
  EXPECT_FALSE(validate_pdc(k3, PathDoubleCover{{{0, 5}}}).valid);

  EXPECT_TRUE(find_spdc(graphs::empty(4)).paths.empty());
}

TEST(Spdc, Deterministic) {
  const Graph g = graphs::wheel(6);
  EXPECT_EQ(find_spdc(g), find_spdc(g));
}

TEST(Spdc, SmallOnEveryGraphUpToSix) {
  for (const Graph& g : graphs_up_to(6, false)) expect_small_cover(g);
}

TEST(Spdc, SmallOnSeededRandomGraphsUpToTen) {
  std::mt19937_64 rng(4242);
  for (int n = 7; n <= 10; ++n) {
    for (double density : {0.3, 0.5, 0.8}) {
      for (int trial = 0; trial < 3; ++trial) expect_small_cover(random_graph(n, density, rng));
    }
  }
  expect_small_cover(graphs::complete(8));
  expect_small_cover(graphs::complete(9));
  expect_small_cover(graphs::complete(10));
  expect_small_cover(graphs::complete_bipartite(5, 5));
}

TEST(Spdc, BudgetExhaustionIsDistinct) {
  SpdcOptions tiny;
  tiny.node_budget = 1;
  EXPECT_THROW(find_spdc(graphs::complete(6), tiny), SpdcSearchError);
}

TEST(CoverBound, KnownValues) {
  const Graph k3 = graphs::complete(3);
  const PathDoubleCover cover{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  const auto b = bound_from_cover(WeightedGraph::unit(k3), cover);
  EXPECT_EQ(b.path_sum, Rational(3));
  EXPECT_EQ(b.edge_sum, Rational(3, 2));
  EXPECT_TRUE(b.doubling_identity);
  EXPECT_EQ(b.t, 3U);
  EXPECT_EQ(b.certified, Rational(3, 2));

  const WeightedGraph edge(graphs::complete(2), {Rational(7, 3)});
  const auto e = bound_from_cover(edge, find_spdc(edge.graph()));
  EXPECT_EQ(e.path_sum, Rational(2));
  EXPECT_EQ(e.certified, Rational(1));

  EXPECT_THROW(bound_from_cover(WeightedGraph::unit(k3), PathDoubleCover{{{0, 1, 2}}}), std::invalid_argument);
}

TEST(CoverBound, DoublingIdentityUnderSeededWeights) {
  std::uint64_t seed = 11;
  for (const Graph& g : graphs_up_to(6, false)) {
    const PathDoubleCover cover = find_spdc(g);
    for (const WeightedGraph& w : {WeightedGraph::unit(g), WeightSampler(seed++).sample(g)}) {
      const auto b = bound_from_cover(w, cover);
      ASSERT_TRUE(b.doubling_identity) << write_graph6(g);
      ASSERT_TRUE(b.per_path_at_most_one) << write_graph6(g) << " " << w.weights_string();
      ASSERT_LE(b.edge_sum, b.certified);
      ASSERT_LE(b.certified, Rational(g.order(), 2));
    }
  }
}

TEST(CoverIo, RoundTripsWithComments) {
  const PathDoubleCover cover{{{0, 1, 2}, {3}, {2, 1}}};
  std::stringstream io;
  io << "# a cover\n";
  write_cover(io, cover);
  EXPECT_EQ(read_cover(io), cover);
  std::istringstream bad("0 1 x\n");
  EXPECT_THROW(read_cover(bad), std::invalid_argument);
}
