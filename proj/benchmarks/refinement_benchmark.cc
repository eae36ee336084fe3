// Copyright 2026 The IRNI Authors
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
#include <unordered_set>

#include "irni/augment.h"
#include "irni/datasets.h"
#include "irni/ir_tree.h"
#include "irni/refinement.h"

namespace irni {
namespace {

Graph SparseRandomGraph(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> vertex(0, n - 1);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    Vertex u = vertex(rng);
    Vertex v = vertex(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(static_cast<std::uint64_t>(u) * n + v).second) {
      edges.push_back({u, v, 0});
    }
  }
  return Graph::Create(n, std::move(edges));
}

void BM_ColorRefineSparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = SparseRandomGraph(n, 5 * n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ColorRefine(g, Coloring::Uniform(n)));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ColorRefineSparse)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)
    ->Complexity();

// Regular graphs are the hard case: the root coloring is uniform and only
// individualization makes progress.
void BM_ColorRefineCslIndividualized(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = GenCsl(n, 3);
  const std::vector<Vertex> nu = {0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ColorRefine(g, Coloring::Uniform(n), nu));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ColorRefineCslIndividualized)->RangeMultiplier(4)
    ->Range(1 << 8, 1 << 16)->Complexity();

void BM_RandomWalkRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = GenRandomRegular(n, 3, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RandomWalk(g, Coloring::Uniform(n), TreeConfig{}, MaxDepth(g), seed++));
  }
}
BENCHMARK(BM_RandomWalkRegular)->Arg(64)->Arg(256)->Arg(1024);

void BM_IrniFeatures(benchmark::State& state) {
  const Graph g = GenCsl(41, 9);
  AugmentConfig cfg;
  cfg.d = static_cast<int>(state.range(0));
  std::uint64_t index = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        IrniFeatures(g, Coloring::Uniform(41), cfg, index++));
  }
}
BENCHMARK(BM_IrniFeatures)->Arg(1)->Arg(4)->Arg(41);

}  // namespace
}  // namespace irni

BENCHMARK_MAIN();
