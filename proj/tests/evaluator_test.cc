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
#include "kuniform/evaluator.h"

#include <random>

#include <gtest/gtest.h>

#include "kuniform/analysis.h"
#include "kuniform/generators.h"
#include "oracles.h"

namespace kuniform {
namespace {

std::vector<double> RandomStrategy(std::mt19937_64& rng, int m) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> s(m);
  double sum = 0.0;
  for (double& p : s) sum += (p = rng() % 3 == 0 ? 0.0 : exp1(rng));
  if (sum == 0.0) {
    s[0] = 1.0;
    return s;
  }
  for (double& p : s) p /= sum;
  return s;
}

MixedProfile Snapshot(const DeviationEvaluator& eval, int n) {
  std::vector<std::vector<double>> s;
  for (int i = 0; i < n; ++i) {
    s.emplace_back(eval.strategy(i).begin(), eval.strategy(i).end());
  }
  return MixedProfile(std::move(s));
}

void ExpectMatchesDirect(const Game& game, std::uint64_t seed) {
  const int n = game.num_players();
  const int m = game.num_actions();
  std::mt19937_64 rng(seed);
  DeviationEvaluator eval(game);
  for (int step = 0; step < 60; ++step) {
    // Change one random player, then query a random subset of players so that
    // caches at various depths get reused.
    eval.SetStrategy(static_cast<int>(rng() % n), RandomStrategy(rng, m));
    const MixedProfile x = Snapshot(eval, n);
    for (int i = 0; i < n; ++i) {
      if (rng() % 2 == 0) continue;
      const std::vector<double> direct = DeviationPayoffs(game, i, x);
      const auto cached = eval.Deviations(i);
      ASSERT_EQ(cached.size(), direct.size());
      for (int a = 0; a < m; ++a) EXPECT_NEAR(cached[a], direct[a], 1e-12);
    }
    const RegretReport report = Regret(game, x);
    EXPECT_NEAR(eval.MaxRegret(), report.max_regret, 1e-12);
    for (double eps : {0.0, 0.05, 0.2}) {
      EXPECT_EQ(eval.IsEpsilonEquilibrium(eps), report.IsEpsilonEquilibrium(eps));
    }
  }
}

TEST(DeviationEvaluatorTest, DenseMatchesDirectEvaluation) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    ExpectMatchesDirect(testing::RandomGame(seed, 2 + seed % 3, 2 + seed % 3), seed);
  }
}

TEST(DeviationEvaluatorTest, GraphicalMatchesDirectEvaluation) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    ExpectMatchesDirect(Generate(GeneratorKind::kGraphicalRandom,
                                 {.players = 5, .actions = 3, .degree = 2}, seed),
                        seed);
    ExpectMatchesDirect(Generate(GeneratorKind::kGraphicalRing,
                                 {.players = 4, .actions = 2, .degree = 1}, seed),
                        seed);
  }
}

TEST(DeviationEvaluatorTest, CountsMatchAggregate) {
  const Game game = testing::RandomGame(42, 3, 3);
  DeviationEvaluator eval(game);
  const KUniformProfile p(4, {{0, 0, 1, 2}, {2, 2, 2, 2}, {0, 1, 1, 1}});
  for (int i = 0; i < 3; ++i) eval.SetCounts(i, p.Counts(i, 3), 4);
  EXPECT_NEAR(eval.MaxRegret(), Regret(game, Aggregate(p, 3)).max_regret, 1e-12);
}

TEST(DeviationEvaluatorTest, MatchingPenniesRegrets) {
  const Game mp = testing::MatchingPennies();
  DeviationEvaluator eval(mp);
  // Default state is everyone on action 0.
  EXPECT_EQ(eval.PlayerRegret(0), 0.0);
  EXPECT_EQ(eval.PlayerRegret(1), 1.0);
  const std::vector<double> half = {0.5, 0.5};
  eval.SetStrategy(1, half);
  EXPECT_DOUBLE_EQ(eval.PlayerRegret(1), 0.5);
  eval.SetStrategy(0, half);
  EXPECT_EQ(eval.MaxRegret(), 0.0);
  EXPECT_TRUE(eval.IsEpsilonEquilibrium(0.0));
}

TEST(DeviationEvaluatorTest, OnePlayerGame) {
  const Game g = Game::Dense(1, 3, {{0.2, 0.9, 0.4}});
  DeviationEvaluator eval(g);
  EXPECT_DOUBLE_EQ(eval.MaxRegret(), 0.7);
  eval.SetStrategy(0, std::vector<double>{0, 1, 0});
  EXPECT_TRUE(eval.IsEpsilonEquilibrium(0.0));
}

}  // namespace
}  // namespace kuniform
