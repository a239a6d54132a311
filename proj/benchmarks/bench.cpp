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

#include <benchmark/benchmark.h>

#include <random>

#include "locturan/canonical.hpp"
#include "locturan/covers.hpp"
#include "locturan/local_stats.hpp"
#include "locturan/matching_structure.hpp"
#include "locturan/weighted_graph.hpp"

using namespace locturan;

namespace {

Graph random_graph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back(Edge::make(u, v));
    }
  }
  return Graph(n, edges);
}

void BM_PathProfile(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(edge_profile(g, StatKind::kPath));
}
BENCHMARK(BM_PathProfile)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

void BM_CycleProfile(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(edge_profile(g, StatKind::kCycle));
}
BENCHMARK(BM_CycleProfile)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_WeightedPathProfile(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 3);
  const WeightedGraph w = WeightSampler(3).sample(g);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_path_profile(w));
}
BENCHMARK(BM_WeightedPathProfile)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  std::vector<Graph> graphs;
  for (std::uint64_t s = 0; s < 32; ++s) graphs.push_back(random_graph(static_cast<int>(state.range(0)), 0.5, s));
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(canonical_form(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 9, 1)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(static_cast<int>(state.range(0)), false));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);

void BM_SpdcComplete(benchmark::State& state) {
  const Graph g = graphs::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_spdc(g));
}
BENCHMARK(BM_SpdcComplete)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SpdcRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_spdc(g));
}
BENCHMARK(BM_SpdcRandom)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_GallaiEdmonds(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(gallai_edmonds(g));
}
BENCHMARK(BM_GallaiEdmonds)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
