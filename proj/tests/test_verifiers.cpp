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

#include <sstream>

#include "locturan/canonical.hpp"
#include "locturan/corpus.hpp"
#include "locturan/graph6.hpp"
#include "locturan/report.hpp"
#include "locturan/verifiers.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace locturan;
using testing_support::graphs_up_to;

namespace {

Graph join_independent(int mu, int n) { return graphs::join(graphs::complete(mu), graphs::empty(n - mu)); }

void expect_sides(const VerificationReport& r, const Rational& lhs, const Rational& rhs) {
  EXPECT_EQ(r.lhs, lhs) << to_text(r);
  EXPECT_EQ(r.rhs, rhs) << to_text(r);
  EXPECT_EQ(r.slack, rhs - lhs);
  EXPECT_EQ(r.equality, lhs == rhs);
}

}  // namespace

TEST(ErdosGallai, KnownValues) {
  const auto k4 = verify_eg_path(graphs::complete(4));
  expect_sides(k4, 3, 3);
  EXPECT_EQ(k4.status, ReportStatus::kPass);

  expect_sides(verify_eg_cycle(graphs::cycle(5)), Rational(5, 2), 5);
  EXPECT_EQ(verify_eg_cycle(graphs::path(4)).status, ReportStatus::kHypothesisNotMet);
  EXPECT_EQ(verify_eg_cycle(graphs::empty(1)).status, ReportStatus::kHypothesisNotMet);

  const auto star = verify_eg_matching(graphs::star(4));
  expect_sides(star, 4, 4);
  EXPECT_EQ(verify_eg_matching(graphs::complete(4)).status, ReportStatus::kHypothesisNotMet);
}

TEST(Bbrs, KnownValues) {
  const auto two = verify_bbrs(graphs::disjoint_union(graphs::complete(3), graphs::complete(2)));
  expect_sides(two, 4, 4);
  EXPECT_EQ(two.family, "disjoint-cliques");
  EXPECT_EQ(two.family_match, true);

  const auto p4 = verify_bbrs(graphs::path(4));
  expect_sides(p4, 3, 5);
  EXPECT_EQ(p4.family, std::nullopt);
  EXPECT_EQ(p4.family_match, true);

  expect_sides(verify_bbrs(graphs::empty(5)), 0, 0);
}

TEST(MtZz, KnownValues) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_TRUE(verify_mt_path(graphs::complete(n)).equality);
    EXPECT_TRUE(verify_zz_cycle(graphs::complete(n)).equality);
  }
  expect_sides(verify_zz_cycle(graphs::complete(4)), Rational(3, 2), Rational(3, 2));
  expect_sides(verify_zz_cycle(graphs::star(5)), Rational(5, 2), Rational(5, 2));
  expect_sides(verify_zz_cycle(graphs::path(6)), Rational(5, 2), Rational(5, 2));
  EXPECT_EQ(verify_mt_path(graphs::complete(5)).family_match, std::nullopt);
}

TEST(LocalBbrs, KnownValues) {
  const auto k3 = verify_local_bbrs(graphs::complete(3), 1);
  expect_sides(k3, 1, 1);
  EXPECT_EQ(k3.family, "complete");
  EXPECT_EQ(k3.status, ReportStatus::kPass);

  const auto bow = verify_local_bbrs(graphs::bowtie(), 0);
  expect_sides(bow, 2, 2);
  EXPECT_EQ(bow.family, "cliques-sharing-v");

  const auto p3 = verify_local_bbrs(graphs::path(3), 0);
  expect_sides(p3, Rational(3, 4), 1);
  EXPECT_EQ(p3.family_match, true);

  EXPECT_EQ(verify_local_bbrs(graphs::empty(2), 0).status, ReportStatus::kHypothesisNotMet);
}

TEST(LocalMatching, KnownValues) {
  const auto k3 = verify_local_matching(graphs::complete(3));
  expect_sides(k3, 3, 3);
  EXPECT_EQ(k3.family, "triangle");

  const auto star = verify_local_matching(graphs::star(4));
  expect_sides(star, 4, 4);
  EXPECT_EQ(star.family, "star");

  const auto join = verify_local_matching(join_independent(2, 6));
  expect_sides(join, 5, 5);
  EXPECT_EQ(join.family, "clique-join-independent");
  EXPECT_EQ(join.status, ReportStatus::kPass);

  const auto k3k1 = verify_local_matching(graphs::disjoint_union(graphs::complete(3), graphs::empty(1)));
  EXPECT_TRUE(k3k1.equality);
  EXPECT_EQ(k3k1.family, "triangle-plus-isolated");

  const auto k4 = verify_local_matching(graphs::complete(4));
  expect_sides(k4, 3, 3);
  EXPECT_EQ(k4.family, "complete");

  EXPECT_EQ(verify_local_matching(graphs::empty(3)).status, ReportStatus::kHypothesisNotMet);
}

TEST(LocalMatching, StatementRowsReproduce) {
  for (int n = 4; n <= 8; ++n) EXPECT_TRUE(verify_local_matching(graphs::star(n - 1)).equality) << n;
  for (int mu = 2; mu <= 3; ++mu) {
    for (int n = 2 * mu + 1; n <= 9; ++n) {
      const auto r = verify_local_matching(join_independent(mu, n));
      EXPECT_EQ(r.equality, 2 * n >= 5 * mu + 2) << "mu=" << mu << " n=" << n;
      EXPECT_EQ(r.status, ReportStatus::kPass);
    }
  }
  // K_5 at n = 5 attains the bound although 5 != 5 mu/2 + 1 = 6.
  const auto k5 = verify_local_matching(graphs::complete(5));
  EXPECT_TRUE(k5.equality);
  EXPECT_EQ(k5.family_match, true);
  EXPECT_EQ(k5.family_match_alt, false);
}

// With a perfect matching the bound n - 1 is also attained by two
// non-complete graphs on four vertices, so the "only complete graphs" clause
// does not hold. The verifier must flag both rather than call them passes.
TEST(LocalMatching, PerfectMatchingEqualityIsNotOnlyComplete) {
  const std::vector<Edge> paw_edges{Edge::make(1, 2), Edge::make(0, 3), Edge::make(1, 3), Edge::make(2, 3)};
  const Graph paw(4, paw_edges);
  const Graph k4_minus = graphs::complete(4).without_edges(std::vector<Edge>{Edge::make(0, 1)});
  for (const Graph& g : {paw, k4_minus}) {
    SCOPED_TRACE(write_graph6(g));
    // Brute force: sum of 1/mu(e) over all edges.
    Rational sum;
    for (std::size_t i = 0; i < g.size(); ++i) sum += Rational(1, oracle::mu_of_edge(g, i));
    EXPECT_EQ(sum, Rational(3));
    EXPECT_EQ(oracle::matching_number(g), 2);
    const auto r = verify_local_matching(g);
    expect_sides(r, 3, 3);
    EXPECT_EQ(r.family_match, false);
    EXPECT_EQ(r.status, ReportStatus::kFail);
  }
  EXPECT_EQ(canonical_form(paw), "CN");
  EXPECT_EQ(canonical_form(k4_minus), "C^");
}

TEST(WeightedVerifiers, KnownValues) {
  const Graph k3 = graphs::complete(3);
  const auto tri = verify_weighted_mt(WeightedGraph(k3, {1, 1, 0}), true);
  // Terms: 01 -> 1/2, 02 -> 1/2, 12 -> 0.
  expect_sides(tri, 1, Rational(3, 2));
  EXPECT_NE(tri.witness.find("chain=ok"), std::string::npos);

  expect_sides(verify_fmr(WeightedGraph(k3, {1, 1, 0})), Rational(4, 3), 2);
  expect_sides(verify_bondy_fan(WeightedGraph(graphs::cycle(4), {1, 2, 3, 4})), Rational(20, 3), 10);
  EXPECT_EQ(verify_bondy_fan(WeightedGraph::unit(graphs::path(3))).status, ReportStatus::kHypothesisNotMet);
}

TEST(Ning, KnownValues) {
  expect_sides(verify_ning_vpath(graphs::complete(4), 2), 3, 3);
  expect_sides(verify_ning_vpath(graphs::star(3), 0), 1, 1);
  expect_sides(verify_ning_vpath(graphs::path(4), 0), Rational(5, 3), 3);
  EXPECT_EQ(verify_ning_vpath(graphs::empty(1), 0).status, ReportStatus::kHypothesisNotMet);
}

TEST(GeneralizedTuran, KnownValues) {
  const Graph k4 = graphs::complete(4);
  expect_sides(verify_gt_path(k4, 3), 2, 2);
  expect_sides(verify_gt_star(k4, 3), 2, 2);
  expect_sides(verify_gt_path(graphs::cycle(5), 3), 0, Rational(5, 3));
  EXPECT_THROW(verify_gt_path(k4, 1), std::invalid_argument);
  EXPECT_THROW(verify_gt_star(k4, 1), std::invalid_argument);
}

TEST(GeneralizedTuran, AnyCenterReadingIsNoted) {
  // K_{1,3} plus an edge between two leaves: the leaf edge has s(e) = 2 but a
  // star centered at the hub also contains it.
  const Graph g = graphs::star(3).with_edge(Edge::make(1, 2));
  const auto r = verify_gt_star(g, 2);
  EXPECT_EQ(r.status, ReportStatus::kPass);
  EXPECT_FALSE(r.witness.empty());
  EXPECT_TRUE(same_outcome(r, verify_star_prop(g)));
}

TEST(StarProp, KnownValues) {
  for (int n = 2; n <= 6; ++n) expect_sides(verify_star_prop(graphs::star(n - 1)), 1, Rational(n, 2));
  expect_sides(verify_star_prop(graphs::complete(5)), Rational(5, 2), Rational(5, 2));
  expect_sides(verify_star_prop(graphs::empty(4)), 0, 2);
}

TEST(Delta, KnownValues) {
  expect_sides(verify_delta_lemma(graphs::complete(5), 2), 4, 4);
  expect_sides(verify_delta_lemma(graphs::complete(4), 3), 3, 3);
  expect_sides(verify_delta_lemma(graphs::star(5), 2), 1, 5);
  EXPECT_EQ(verify_delta_lemma(graphs::path(3), 3).status, ReportStatus::kHypothesisNotMet);
  EXPECT_THROW(verify_delta_lemma(graphs::path(3), 0), std::invalid_argument);
  expect_sides(verify_ning_peng(graphs::complete(5), 2), 4, 4);
}

TEST(Structure, KnownValues) {
  const Graph k5_minus = graphs::complete(5).without_edges(std::vector<Edge>{Edge::make(0, 1)});
  expect_sides(verify_closure_matching(k5_minus), 2, 2);
  expect_sides(verify_stability(graphs::complete(5)), 5, 5);
  EXPECT_EQ(verify_stability(graphs::disjoint_union(graphs::complete(5), graphs::empty(1))).status,
            ReportStatus::kHypothesisNotMet);
  EXPECT_EQ(verify_stability(graphs::cycle(5)).status, ReportStatus::kHypothesisNotMet);
  EXPECT_EQ(verify_nw_bound(graphs::cycle(5)).status, ReportStatus::kPass);
  EXPECT_EQ(verify_nw_bound(graphs::empty(3)).status, ReportStatus::kHypothesisNotMet);
}

TEST(Reductions, SEqualsTwoAndUnitWeights) {
  for (const Graph& g : graphs_up_to(5, false)) {
    ASSERT_TRUE(same_outcome(verify_gt_path(g, 2), verify_mt_path(g))) << write_graph6(g);
    ASSERT_TRUE(same_outcome(verify_gt_star(g, 2), verify_star_prop(g))) << write_graph6(g);
    const WeightedGraph unit = WeightedGraph::unit(g);
    ASSERT_TRUE(same_outcome(verify_weighted_mt(unit), verify_mt_path(g))) << write_graph6(g);
    ASSERT_TRUE(same_outcome(verify_fmr(unit), verify_eg_path(g))) << write_graph6(g);
    ASSERT_TRUE(same_outcome(verify_bondy_fan(unit), verify_eg_cycle(g))) << write_graph6(g);
  }
}

TEST(Reports, SerializeExactly) {
  const auto r = verify_local_bbrs(graphs::path(3), 0);
  EXPECT_EQ(to_json(r),
            R"({"theorem":"local-bbrs","graph6":"Bg","root":0,"status":"pass","lhs":"3/4","rhs":"1",)"
            R"("slack":"1/4","equality":false,"family_match":true})");
  EXPECT_EQ(to_csv(r), "local-bbrs,Bg,0,,,,pass,3/4,1,1/4,false,,true,,");
  const std::string header = csv_header();
  const std::string row = to_csv(r);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
  EXPECT_EQ(to_text(r), "local-bbrs Bg v=0 pass 3/4 <= 1 slack=1/4");

  const auto skipped = verify_eg_cycle(graphs::path(3));
  EXPECT_EQ(to_json(skipped),
            R"({"theorem":"eg-cycle","graph6":"Bg","status":"hypothesis-not-met","witness":"not 2-edge-connected"})");
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::kCsv);
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}

TEST(Catalog, EveryIdDispatches) {
  CorpusOptions opts;
  opts.clique_orders = {2, 3};
  for (const TheoremInfo& info : theorem_catalog()) {
    EXPECT_FALSE(verify_graph(info.id, graphs::wheel(4), opts).empty()) << info.id;
  }
  EXPECT_THROW(theorem_info("nope"), std::invalid_argument);
}

TEST(Corpus, SmallRunIsCleanAndOrdered) {
  CorpusOptions opts;
  for (const TheoremInfo& info : theorem_catalog()) opts.theorems.push_back(info.id);
  opts.weights = WeightSource::kRandom;
  opts.seed = 7;
  opts.trials = 3;
  std::vector<std::string> serial;
  opts.threads = 1;
  const CorpusResult one = verify_corpus(1, 5, false, opts, [&](const VerificationReport& r) {
    serial.push_back(to_json(r));
  });
  // Every inequality holds. The only failures are the two perfect-matching
  // equality cases pinned in LocalMatching.PerfectMatchingEqualityIsNotOnlyComplete.
  for (const TheoremSummary& s : one.summaries) {
    if (s.min_slack) EXPECT_GE(*s.min_slack, Rational(0)) << s.theorem;
    if (s.theorem != "local-matching") EXPECT_EQ(s.failed, 0U) << s.theorem;
  }
  std::vector<std::string> failing;
  for (const VerificationReport& r : one.summary("local-matching").failures) failing.push_back(r.graph6);
  EXPECT_EQ(failing, (std::vector<std::string>{"CN", "C^"})) << summary_json(one);
  EXPECT_EQ(one.graphs, 1U + 2 + 4 + 11 + 34);

  std::vector<std::string> parallel;
  opts.threads = 4;
  const CorpusResult four = verify_corpus(1, 5, false, opts, [&](const VerificationReport& r) {
    parallel.push_back(to_json(r));
  });
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(summary_json(one, true), summary_json(four, true));
  EXPECT_THROW(verify_corpus(0, 3, false, opts), std::out_of_range);
  EXPECT_THROW(verify_corpus(1, 9, false, opts), std::out_of_range);
}

TEST(Corpus, RandomWeightsEchoSeeds) {
  CorpusOptions opts;
  opts.theorems = {"weighted-mt"};
  opts.weights = WeightSource::kRandom;
  opts.seed = 7;
  opts.trials = 2;
  const auto reports = verify_graph("weighted-mt", graphs::complete(3), opts);
  ASSERT_EQ(reports.size(), 2U);
  EXPECT_EQ(reports[0].seed, 7U);
  EXPECT_EQ(reports[1].seed, 8U);
  EXPECT_EQ(*reports[0].weights, WeightSampler(7).sample(graphs::complete(3)).weights_string());
}
