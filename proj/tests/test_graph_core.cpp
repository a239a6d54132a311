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

#include "locturan/canonical.hpp"
#include "locturan/connectivity.hpp"
#include "locturan/graph.hpp"
#include "locturan/graph6.hpp"
#include "locturan/rational.hpp"
#include "locturan/weighted_graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace locturan;
using testing_support::graphs_of_order;
using testing_support::graphs_up_to;

TEST(Rational, ReducesAndPrints) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(-6, -3).str(), "2");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(Rational, StaysExactBeyondSixtyFourBits) {
  Rational x(1);
  for (int i = 0; i < 80; ++i) x *= Rational(3, 2);
  for (int i = 0; i < 80; ++i) x /= Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Edge::make(2, 2), std::invalid_argument);
  const std::vector<Edge> out_of_range{Edge::make(0, 3)};
  EXPECT_THROW(Graph(3, out_of_range), std::invalid_argument);
  EXPECT_THROW(Graph(33), std::invalid_argument);
}

TEST(Graph, EdgesAreLexicographicAndMatchBitsets) {
  const Graph g = graphs::wheel(5);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g.edges()[i - 1], g.edges()[i]);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.adjacent(v, v));
    for (Vertex w = 0; w < g.order(); ++w) EXPECT_EQ(g.adjacent(v, w), g.adjacent(w, v));
    degree_sum += g.degree(v);
  }
  EXPECT_EQ(degree_sum, 2 * g.size());
  for (const Edge& e : g.edges()) EXPECT_TRUE(g.adjacent(e.u, e.v));
}

TEST(Graph6, KnownValues) {
  const Graph d = parse_graph6("D?{");
  EXPECT_EQ(d.order(), 5);
  EXPECT_EQ(write_graph6(d), "D?{");
  EXPECT_EQ(d, oracle::decode_graph6("D?{"));

  const Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.order(), 1);
  EXPECT_EQ(k1.size(), 0U);
  EXPECT_EQ(write_graph6(graphs::empty(1)), "@");

  const Graph k3 = parse_graph6("Bw");
  EXPECT_EQ(k3, graphs::complete(3));
  EXPECT_EQ(write_graph6(graphs::complete(3)), "Bw");

  const Graph p4 = graphs::path(4);
  EXPECT_EQ(parse_graph6(write_graph6(p4)), p4);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), Graph6Error);
  EXPECT_THROW(parse_graph6("B"), Graph6Error);        // missing data byte
  EXPECT_THROW(parse_graph6("Bww"), Graph6Error);      // trailing byte
  EXPECT_THROW(parse_graph6("B\x20"), Graph6Error);    // byte below 63
  EXPECT_THROW(parse_graph6("~?@?"), Graph6Error);     // long form unsupported
  EXPECT_THROW(parse_graph6("B~"), Graph6Error);       // nonzero padding
  EXPECT_NO_THROW(parse_graph6(">>graph6<<Bw\r\n"));
}

TEST(Graph6, MatchesIndependentDecoderOnSmallCorpus) {
  for (const Graph& g : graphs_up_to(5, false)) {
    const std::string s = write_graph6(g);
    EXPECT_EQ(oracle::decode_graph6(s), g) << s;
  }
}

TEST(Graph6, RoundTripOnFullCorpusUpToSeven) {
  for (const Graph& g : graphs_up_to(7, false)) EXPECT_EQ(parse_graph6(write_graph6(g)), g);
}

TEST(Canonical, KnownValues) {
  const Graph k3 = graphs::complete(3);
  std::vector<Vertex> perm{2, 0, 1};
  EXPECT_EQ(canonical_form(k3.relabeled(perm)), canonical_form(k3));
  EXPECT_NE(canonical_form(graphs::path(4)), canonical_form(graphs::star(3)));
}

TEST(Canonical, AgreesWithBruteForceMinimum) {
  for (const Graph& g : graphs_up_to(6, false)) {
    const Graph canon = parse_graph6(canonical_form(g));
    EXPECT_EQ(oracle::bitstring(canon), oracle::brute_canonical_key(g)) << write_graph6(g);
  }
}

TEST(Canonical, InvariantUnderSeededRelabeling) {
  std::mt19937_64 rng(20261015);
  for (const Graph& g : graphs_up_to(6, false)) {
    const std::string expected = canonical_form(g);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(canonical_form(g.relabeled(perm)), expected);
    }
  }
}

TEST(Enumeration, KnownCounts) {
  const std::size_t total[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(graphs_of_order(n, false).size(), total[n]) << n;
    EXPECT_EQ(graphs_of_order(n, true).size(), connected[n]) << n;
  }
  EXPECT_THROW(enumerate_graphs(0, false), std::out_of_range);
  EXPECT_THROW(enumerate_graphs(9, false), std::out_of_range);
}

TEST(Enumeration, MatchesLabeledBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(graphs_of_order(n, false).size(), oracle::count_classes(n, false)) << n;
    EXPECT_EQ(graphs_of_order(n, true).size(), oracle::count_classes(n, true)) << n;
  }
}

TEST(Enumeration, DistinctAndSortedByCanonicalForm) {
  const auto& level = graphs_of_order(6, false);
  for (std::size_t i = 1; i < level.size(); ++i) {
    EXPECT_LT(canonical_form(level[i - 1]), canonical_form(level[i]));
  }
  for (const Graph& g : level) EXPECT_EQ(canonical_form(g), write_graph6(g));
}

TEST(Connectivity, KnownValues) {
  const Graph k3k1 = graphs::disjoint_union(graphs::complete(3), graphs::empty(1));
  ASSERT_EQ(connected_components(k3k1).size(), 2U);
  EXPECT_EQ(popcount(connected_components(k3k1)[0]), 3);

  const Graph two_k3 = graphs::disjoint_union(graphs::disjoint_union(graphs::complete(3), graphs::complete(3)),
                                              graphs::empty(2));
  std::vector<int> sizes;
  for (VertexSet c : connected_components(two_k3)) sizes.push_back(popcount(c));
  EXPECT_EQ(sizes, (std::vector<int>{3, 3, 1, 1}));

  EXPECT_EQ(cut_vertices(graphs::bowtie()), bit(0));
  EXPECT_EQ(cut_vertices(graphs::complete(5)), 0U);
  EXPECT_EQ(cut_vertices(graphs::path(4)), bit(1) | bit(2));

  const Graph tree = graphs::star(4);
  const auto td = cut_edges_and_2ec_pieces(tree);
  EXPECT_EQ(td.cut_edges.size(), 4U);
  EXPECT_EQ(td.pieces.size(), 5U);

  const auto cd = cut_edges_and_2ec_pieces(graphs::cycle(5));
  EXPECT_TRUE(cd.cut_edges.empty());
  EXPECT_EQ(cd.pieces.size(), 1U);

  const std::vector<Edge> dumbbell{Edge::make(0, 1), Edge::make(0, 2), Edge::make(1, 2), Edge::make(2, 3),
                                   Edge::make(3, 4), Edge::make(3, 5), Edge::make(4, 5)};
  const auto dd = cut_edges_and_2ec_pieces(Graph(6, dumbbell));
  EXPECT_EQ(dd.cut_edges, (std::vector<Edge>{Edge::make(2, 3)}));
  EXPECT_EQ(dd.pieces, (std::vector<VertexSet>{0b000111, 0b111000}));

  EXPECT_FALSE(is_two_edge_connected(graphs::empty(1)));
  EXPECT_TRUE(is_two_edge_connected(graphs::cycle(3)));
  EXPECT_FALSE(is_two_edge_connected(graphs::complete(2)));
}

TEST(Connectivity, AgreesWithRemovalOracles) {
  for (const Graph& g : graphs_up_to(6, false)) {
    EXPECT_EQ(cut_vertices(g), oracle::cut_vertices(g)) << write_graph6(g);
    const auto bd = cut_edges_and_2ec_pieces(g);
    EXPECT_EQ(bd.cut_edges, oracle::bridges(g)) << write_graph6(g);
    EXPECT_EQ(static_cast<int>(connected_components(g).size()), oracle::component_count(g, g.vertices()));

    // Removing the cut edges leaves exactly the pieces, each bridgeless.
    const Graph rest = g.without_edges(bd.cut_edges);
    EXPECT_EQ(connected_components(rest), bd.pieces);
    for (VertexSet piece : bd.pieces) EXPECT_TRUE(cut_edges_and_2ec_pieces(g.induced(piece)).cut_edges.empty());
  }
}

TEST(WeightedGraph, ValidatesAndSerializes) {
  const Graph k3 = graphs::complete(3);
  EXPECT_THROW(WeightedGraph(k3, {Rational(1)}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(k3, {Rational(1), Rational(-1), Rational(1)}), std::invalid_argument);

  const WeightedGraph w(k3, {Rational(1), Rational(1, 2), Rational(0)});
  EXPECT_EQ(w.total_weight(), Rational(3, 2));
  EXPECT_EQ(w.weights_string(), "1,1/2,0");
  const std::vector<Vertex> walk{1, 0, 2};
  EXPECT_EQ(w.path_weight(walk), Rational(3, 2));

  std::stringstream io;
  write_weighted_graph(io, w);
  io << "# comment\n\n";
  write_weighted_graph(io, WeightedGraph::unit(graphs::path(3)));
  EXPECT_EQ(read_weighted_graph(io), w);
  EXPECT_EQ(read_weighted_graph(io), WeightedGraph::unit(graphs::path(3)));
  EXPECT_EQ(read_weighted_graph(io), std::nullopt);

  std::istringstream bad("2 1\n0 1 x\n");
  EXPECT_THROW(read_weighted_graph(bad), std::invalid_argument);
}

TEST(WeightSampler, SeededAndInRange) {
  const Graph g = graphs::complete(5);
  const WeightedGraph a = WeightSampler(7).sample(g);
  EXPECT_EQ(a, WeightSampler(7).sample(g));
  EXPECT_NE(a, WeightSampler(8).sample(g));
  for (const Rational& w : a.weights()) {
    EXPECT_FALSE(w.is_negative());
    EXPECT_LE(w, Rational(9));
    EXPECT_LE(w.denominator(), 4);
  }
}
