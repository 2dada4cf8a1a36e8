// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "kuniform/generators.h"
#include "kuniform/lift.h"
#include "kuniform/search.h"

namespace kuniform {
namespace {

// Time to the first exact equilibrium, or to the end of the enumeration.
void BM_ExhaustiveSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Game game = Generate(GeneratorKind::kRandomDense, {.players = n, .actions = m}, 1);
  SearchConfig config;
  config.k = static_cast<int>(state.range(2));
  config.epsilon = 0.0;
  std::uint64_t visited = 0;
  for (auto _ : state) {
    const SearchResult r = ExhaustiveSearch(game, config);
    visited += r.visited;
    benchmark::DoNotOptimize(r.outcome);
  }
  state.counters["profiles/s"] =
      benchmark::Counter(static_cast<double>(visited), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ExhaustiveSearch)
    ->Args({2, 2, 45})
    ->Args({2, 4, 8})
    ->Args({3, 3, 4})
    ->Args({4, 2, 6})
    ->Unit(benchmark::kMillisecond);

void BM_CountOrderedEquilibria(benchmark::State& state) {
  const Game game = Generate(GeneratorKind::kUniformEquilibrium,
                             {.players = 2, .actions = static_cast<int>(state.range(0))}, 3);
  SearchConfig config;
  config.k = static_cast<int>(state.range(1));
  config.epsilon = 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountOrderedEquilibria(game, config).ordered_equilibria);
  }
}
BENCHMARK(BM_CountOrderedEquilibria)
    ->Args({2, 45})
    ->Args({3, 12})
    ->Args({4, 8})
    ->Unit(benchmark::kMillisecond);

void BM_SampleDensity(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Game game = Generate(GeneratorKind::kUniformEquilibrium, {.players = 2, .actions = m}, 5);
  SearchConfig config;
  config.k = static_cast<int>(state.range(1));
  config.epsilon = 0.5;
  config.max_samples = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MeasureSampleDensity(game, config).successes);
  }
  state.SetItemsProcessed(state.iterations() * config.max_samples);
}
BENCHMARK(BM_SampleDensity)->Args({2, 45})->Args({4, 67})->Unit(benchmark::kMillisecond);

void BM_LiftedRegret(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Game base = Generate(GeneratorKind::kRandomDense, {.players = 3, .actions = 3}, 2);
  const LiftedGame lifted(base, k);
  LiftedPureProfile a;
  for (int i = 0; i < 3; ++i) {
    std::vector<Action> population(k);
    for (int j = 0; j < k; ++j) population[j] = (i + j) % 3;
    a.populations.push_back(std::move(population));
  }
  for (auto _ : state) benchmark::DoNotOptimize(lifted.Regret(a).max_regret);
}
BENCHMARK(BM_LiftedRegret)->Arg(2)->Arg(16)->Arg(128);

}  // namespace
}  // namespace kuniform
