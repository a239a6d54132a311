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

#include "locturan/graph6.hpp"
#include "locturan/matching.hpp"
#include "locturan/matching_structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace locturan;
using testing_support::graphs_up_to;

TEST(FactorCritical, KnownValues) {
  EXPECT_TRUE(is_factor_critical(graphs::empty(1)));
  EXPECT_TRUE(is_factor_critical(graphs::cycle(5)));
  EXPECT_FALSE(is_factor_critical(graphs::path(3)));
  EXPECT_FALSE(is_factor_critical(graphs::complete(4)));
}

TEST(GallaiEdmonds, KnownValues) {
  const auto star = gallai_edmonds(graphs::star(3));
  EXPECT_EQ(star.c, 0U);
  EXPECT_EQ(star.a, bit(0));
  EXPECT_EQ(star.d, bit(1) | bit(2) | bit(3));
  EXPECT_EQ(star.d_components.size(), 3U);

  const auto k4 = gallai_edmonds(graphs::complete(4));
  EXPECT_EQ(k4.c, 0b1111U);
  EXPECT_EQ(k4.a | k4.d, 0U);

  const auto k3k1 = gallai_edmonds(graphs::disjoint_union(graphs::complete(3), graphs::empty(1)));
  EXPECT_EQ(k3k1.d, 0b1111U);
  EXPECT_EQ(k3k1.a | k3k1.c, 0U);
  EXPECT_EQ(k3k1.d_components, (std::vector<VertexSet>{0b0111, 0b1000}));
}

TEST(GallaiEdmonds, AgreesWithMatchingEnumeration) {
  for (const Graph& g : graphs_up_to(7, false)) {
    SCOPED_TRACE(write_graph6(g));
    const auto ge = gallai_edmonds(g);
    ASSERT_EQ(ge.d, oracle::missed_by_some_maximum(g));
    for (VertexSet comp : ge.d_components) ASSERT_TRUE(oracle::is_factor_critical(g.induced(comp)));
    // Every maximum matching, not just the one the library found.
    for (const auto& m : oracle::maximum_matchings(g)) {
      std::vector<Edge> edges;
      for (std::size_t i : m) edges.push_back(g.edges()[i]);
      ASSERT_EQ(check_gallai_edmonds(g, ge, edges), "");
    }
    // n - 2 mu = (number of D components) - |A|.
    const int mu = matching_number(g);
    ASSERT_EQ(g.order() - 2 * mu, static_cast<int>(ge.d_components.size()) - popcount(ge.a));
  }
}

TEST(GallaiEdmonds, CheckerRejectsBrokenStructures) {
  const Graph g = graphs::star(3);
  auto ge = gallai_edmonds(g);
  ge.a = 0;
  EXPECT_NE(check_gallai_edmonds(g, ge, max_matching(g)), "");
  ge = gallai_edmonds(g);
  EXPECT_NE(check_gallai_edmonds(g, ge, {}), "");
}

TEST(Closure, KnownValues) {
  const Graph k5_minus = graphs::complete(5).without_edges(std::vector<Edge>{Edge::make(0, 1)});
  const auto c = k_closure(k5_minus, 5);
  EXPECT_EQ(c.closed, graphs::complete(5));
  EXPECT_EQ(c.added, (std::vector<Edge>{Edge::make(0, 1)}));
  EXPECT_EQ(matching_number(c.closed), 2);

  EXPECT_EQ(k_closure(graphs::path(4), 5).closed, graphs::path(4));
  EXPECT_EQ(k_closure(graphs::cycle(5), 5).closed, graphs::cycle(5));
  EXPECT_EQ(k_closure(graphs::empty(6), 0).closed, graphs::complete(6));
  EXPECT_THROW(k_closure(graphs::path(3), -1), std::invalid_argument);
}

TEST(Closure, ClosedAndSupergraph) {
  for (const Graph& g : graphs_up_to(6, false)) {
    for (int k = 0; k <= 2 * g.order(); ++k) {
      const Graph h = k_closure(g, k).closed;
      for (const Edge& e : g.edges()) ASSERT_TRUE(h.has_edge(e));
      for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
          if (!h.adjacent(u, v)) ASSERT_LT(h.degree(u) + h.degree(v), k);
        }
      }
    }
  }
}

TEST(Closure, IndependentOfAdditionOrder) {
  std::mt19937_64 rng(99);
  for (const Graph& g : graphs_up_to(6, false)) {
    for (int k : {3, 5, 7}) {
      Graph h = g;
      for (bool changed = true; changed;) {
        changed = false;
        std::vector<Edge> eligible;
        for (Vertex u = 0; u < h.order(); ++u) {
          for (Vertex v = u + 1; v < h.order(); ++v) {
            if (!h.adjacent(u, v) && h.degree(u) + h.degree(v) >= k) eligible.push_back(Edge::make(u, v));
          }
        }
        if (eligible.empty()) break;
        h = h.with_edge(eligible[rng() % eligible.size()]);
        changed = true;
      }
      ASSERT_EQ(h, k_closure(g, k).closed) << write_graph6(g) << " k=" << k;
    }
  }
}

TEST(Closure, PreservesMatchingNumber) {
  for (const Graph& g : graphs_up_to(7, false)) ASSERT_TRUE(closure_preserves_matching_number(g)) << write_graph6(g);
}

TEST(NwBound, KnownValues) {
  EXPECT_EQ(nw_bound(2, 2, 6), Rational(13));
  EXPECT_EQ(nw_bound(5, 2, 5), Rational(10));
  EXPECT_THROW(nw_bound(6, 2, 5), std::invalid_argument);
}

TEST(NwBound, HoldsForMuTwoAndThree) {
  for (const Graph& g : graphs_up_to(7, false)) {
    const int mu = matching_number(g);
    if (mu != 2 && mu != 3) continue;
    const auto cb = closure_clique_bound(g);
    ASSERT_LE(cb.edges, cb.bound) << write_graph6(g);
    ASSERT_TRUE(cb.holds_for_all_t) << write_graph6(g);
    ASSERT_LE(cb.s, 2 * mu + 1);
    ASSERT_EQ(cb.clique & cb.high_degree, cb.high_degree);
  }
}

TEST(Stability, KnownValues) {
  const auto k5 = stability_check(graphs::complete(5));
  EXPECT_EQ(k5.mu, 2);
  EXPECT_TRUE(k5.hypothesis);
  EXPECT_TRUE(k5.conclusion);
  // n = 6 exceeds (5 mu + 1)/2 = 11/2, so one extra isolated vertex already
  // leaves the hypothesis.
  const auto k5k1 = stability_check(graphs::disjoint_union(graphs::complete(5), graphs::empty(1)));
  EXPECT_FALSE(k5k1.hypothesis);
  EXPECT_TRUE(k5k1.conclusion);
  const auto c5 = stability_check(graphs::cycle(5));
  EXPECT_FALSE(c5.hypothesis);
  EXPECT_TRUE(c5.holds());
}

TEST(Stability, HoldsOnCorpus) {
  for (const Graph& g : graphs_up_to(7, false)) {
    const auto sv = stability_check(g);
    if (sv.mu == 2 || sv.mu == 3) ASSERT_TRUE(sv.holds()) << write_graph6(g);
  }
}
