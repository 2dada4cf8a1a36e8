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
#include <random>

#include <benchmark/benchmark.h>

#include "kuniform/analysis.h"
#include "kuniform/evaluator.h"
#include "kuniform/generators.h"

namespace kuniform {
namespace {

std::vector<std::vector<double>> RandomStrategies(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp1(1.0);
  std::vector<std::vector<double>> s(n, std::vector<double>(m));
  for (auto& v : s) {
    double sum = 0.0;
    for (double& p : v) sum += (p = exp1(rng));
    for (double& p : v) p /= sum;
  }
  return s;
}

// Regret after a change to the last player's strategy, which is the common
// step of the enumeration odometer.
void BM_RegretDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Game game = Generate(GeneratorKind::kRandomDense, {.players = n, .actions = m}, 1);
  const auto a = RandomStrategies(n, m, 1);
  auto b = a;
  b[n - 1] = RandomStrategies(1, m, 2)[0];
  const MixedProfile x(a), y(b);
  bool flip = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Regret(game, flip ? x : y).max_regret);
    flip = !flip;
  }
}
BENCHMARK(BM_RegretDirect)->Args({2, 8})->Args({3, 4})->Args({4, 3})->Args({5, 3});

void BM_RegretCached(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Game game = Generate(GeneratorKind::kRandomDense, {.players = n, .actions = m}, 1);
  const auto a = RandomStrategies(n, m, 1);
  const auto other = RandomStrategies(1, m, 2)[0];
  DeviationEvaluator evaluator(game);
  for (int i = 0; i < n; ++i) evaluator.SetStrategy(i, a[i]);
  bool flip = false;
  for (auto _ : state) {
    evaluator.SetStrategy(n - 1, flip ? a[n - 1] : other);
    benchmark::DoNotOptimize(evaluator.MaxRegret());
    flip = !flip;
  }
}
BENCHMARK(BM_RegretCached)->Args({2, 8})->Args({3, 4})->Args({4, 3})->Args({5, 3});

void BM_GraphicalRegret(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Game game = Generate(GeneratorKind::kGraphicalRing,
                             {.players = n, .actions = 3, .degree = 2}, 1);
  const MixedProfile x(RandomStrategies(n, 3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(Regret(game, x).max_regret);
}
BENCHMARK(BM_GraphicalRegret)->Arg(8)->Arg(64);

}  // namespace
}  // namespace kuniform
