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
#include "kuniform/lift.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "kuniform/analysis.h"
#include "kuniform/errors.h"
#include "oracles.h"

namespace kuniform {
namespace {

using testing::MatchingPennies;
using testing::RandomGame;

constexpr Action H = 0;
constexpr Action T = 1;

// v_{i(j)}(a) as the average of u_i over one representative per other
// population, enumerated over all k^(n-1) choices.
double LiftedPayoffByMembers(const Game& u, int k, LiftedPlayer who,
                             const LiftedPureProfile& a) {
  const int n = u.num_players();
  std::vector<int> pick(n, 0);
  PureProfile profile(n);
  double sum = 0.0;
  int terms = 0;
  while (true) {
    for (int i = 0; i < n; ++i) {
      profile[i] = i == who.population ? a.populations[i][who.member]
                                       : a.populations[i][pick[i]];
    }
    sum += u.PurePayoff(who.population, profile);
    ++terms;
    int i = n - 1;
    for (; i >= 0; --i) {
      if (i == who.population) continue;
      if (++pick[i] < k) break;
      pick[i] = 0;
    }
    if (i < 0) break;
  }
  return sum / terms;
}

LiftedPureProfile RandomLifted(std::mt19937_64& rng, int n, int m, int k) {
  LiftedPureProfile a;
  a.populations.assign(n, std::vector<Action>(k));
  for (auto& p : a.populations) {
    for (Action& b : p) b = static_cast<Action>(rng() % m);
  }
  return a;
}

// Calls f on every lifted pure profile of an (n, m, k) lift.
template <typename F>
void ForEachLifted(int n, int m, int k, F f) {
  LiftedPureProfile a;
  a.populations.assign(n, std::vector<Action>(k, 0));
  while (true) {
    f(a);
    int p = n * k - 1;
    for (; p >= 0; --p) {
      Action& b = a.populations[p / k][p % k];
      if (++b < m) break;
      b = 0;
    }
    if (p < 0) return;
  }
}

TEST(LiftedPayoffTest, MatchingPenniesExamples) {
  const Game mp = MatchingPennies();
  const LiftedGame v2(mp, 2);
  EXPECT_EQ(v2.Payoff({0, 0}, {{{H, T}, {H, H}}}), 1.0);
  EXPECT_EQ(v2.Payoff({0, 0}, {{{H, H}, {H, T}}}), 0.5);
  const LiftedGame v3(mp, 3);
  EXPECT_NEAR(v3.Payoff({1, 0}, {{{H, H, T}, {H, T, T}}}), 1.0 / 3.0, 1e-15);
}

TEST(LiftedPayoffTest, MatchesMemberAverage) {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + seed % 2, m = 2 + seed % 3, k = 1 + seed % 4;
    const Game u = RandomGame(seed, n, m);
    const LiftedGame v(u, k);
    const LiftedPureProfile a = RandomLifted(rng, n, m, k);
    for (int p = 0; p < n * k; ++p) {
      EXPECT_NEAR(v.Payoff(v.PlayerAt(p), a), LiftedPayoffByMembers(u, k, v.PlayerAt(p), a),
                  1e-12);
    }
  }
}

TEST(LiftedPayoffTest, InvariantUnderPermutationWithinPopulations) {
  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Game u = RandomGame(seed, 3, 3);
    const LiftedGame v(u, 3);
    LiftedPureProfile a = RandomLifted(rng, 3, 3, 3);
    const LiftedPlayer who{static_cast<int>(seed % 3), static_cast<int>(seed % 3)};
    const double before = v.Payoff(who, a);
    const Action own = a.populations[who.population][who.member];
    for (auto& pop : a.populations) std::shuffle(pop.begin(), pop.end(), rng);
    // Put the evaluated member's action back in its slot.
    auto& mine = a.populations[who.population];
    std::iter_swap(std::find(mine.begin(), mine.end(), own), mine.begin() + who.member);
    EXPECT_NEAR(v.Payoff(who, a), before, 1e-15);
  }
}

TEST(LiftedGameTest, RejectsBadProfiles) {
  const Game mp = MatchingPennies();
  const LiftedGame v(mp, 2);
  EXPECT_THROW(v.Payoff({0, 0}, {{{H}, {H, T}}}), InvalidArgument);
  EXPECT_THROW(v.Payoff({0, 0}, {{{H, 2}, {H, T}}}), InvalidArgument);
  EXPECT_THROW(v.Payoff({0, 2}, {{{H, T}, {H, T}}}), InvalidArgument);
  EXPECT_THROW(LiftedGame(mp, 0), InvalidArgument);
}

TEST(LiftedGameTest, MaterializeAgreesAndRespectsBudget) {
  const Game u = RandomGame(9, 2, 3);
  const LiftedGame v(u, 2);
  const Game dense = v.Materialize();
  ASSERT_EQ(dense.num_players(), 4);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const LiftedPureProfile a = RandomLifted(rng, 2, 3, 2);
    PureProfile flat;
    for (const auto& pop : a.populations) flat.insert(flat.end(), pop.begin(), pop.end());
    for (int p = 0; p < 4; ++p) {
      EXPECT_EQ(dense.PurePayoff(p, flat), v.Payoff(v.PlayerAt(p), a));
    }
  }
  EXPECT_THROW(LiftedGame(u, 3).Materialize(1000), BudgetExceeded);
}

TEST(ProjectProfileTest, Examples) {
  const KUniformProfile p = ProjectProfile({{{H, T}, {T, H}}});
  EXPECT_EQ(p, KUniformProfile(2, {{H, T}, {H, T}}));
  const KUniformProfile q = ProjectProfile({{{H, H}, {T, T}}});
  EXPECT_EQ(Aggregate(q, 2).strategies()[0], (std::vector<double>{1, 0}));
  EXPECT_EQ(ProjectProfile({{{T, H, T}, {H, H, T}}}),
            ProjectProfile({{{T, T, H}, {H, T, H}}}));
}

TEST(LiftMixedProfileTest, Examples) {
  const MixedProfile lifted = LiftMixedProfile(MixedProfile::Uniform(2, 2), 2);
  EXPECT_EQ(lifted, MixedProfile::Uniform(4, 2));
  const MixedProfile pure = LiftMixedProfile(MixedProfile({{0, 1}, {1, 0}}), 3);
  EXPECT_EQ(pure, MixedProfile::Pure(std::vector<Action>{T, T, T, H, H, H}, 2));
  EXPECT_EQ(PopulationMeans(lifted, 2, 2), MixedProfile::Uniform(2, 2));
}

TEST(LiftMixedProfileTest, EquilibriumLiftsToZeroRegret) {
  const Game mp = MatchingPennies();
  for (int k : {1, 2, 3}) {
    const Game v = LiftedGame(mp, k).Materialize();
    const MixedProfile x = LiftMixedProfile(MixedProfile::Uniform(2, 2), k);
    // Exhaustive deviation check against the materialized lift.
    for (int p = 0; p < 2 * k; ++p) {
      const double current = ExpectedPayoff(v, p, x);
      for (Action b : {H, T}) {
        auto s = x.strategies();
        s[p] = {b == H ? 1.0 : 0.0, b == T ? 1.0 : 0.0};
        EXPECT_LE(ExpectedPayoff(v, p, MixedProfile(s)), current + 1e-12);
      }
    }
    EXPECT_LE(Regret(v, x).max_regret, 1e-12);
  }
}

TEST(CorrespondenceTest, Examples) {
  const Game mp = MatchingPennies();
  CorrespondenceVerdict c = VerifyCorrespondence(mp, 2, 0.0, {{{H, T}, {H, T}}});
  EXPECT_TRUE(c.lifted_equilibrium);
  EXPECT_TRUE(c.projected_equilibrium);
  c = VerifyCorrespondence(mp, 2, 0.0, {{{H, H}, {H, H}}});
  EXPECT_FALSE(c.lifted_equilibrium);
  EXPECT_FALSE(c.projected_equilibrium);
  EXPECT_EQ(c.lifted_max_regret, 1.0);
  ForEachLifted(2, 2, 2, [&](const LiftedPureProfile& a) {
    const CorrespondenceVerdict all = VerifyCorrespondence(mp, 2, 1.0, a);
    EXPECT_TRUE(all.lifted_equilibrium && all.projected_equilibrium);
  });
}

TEST(CorrespondenceTest, LiftedRegretMatchesDeviationScanOfMaterializedGame) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Game u = RandomGame(seed, 2, 2);
    const LiftedGame v(u, 2);
    const Game dense = v.Materialize();
    ForEachLifted(2, 2, 2, [&](const LiftedPureProfile& a) {
      PureProfile flat;
      for (const auto& pop : a.populations) flat.insert(flat.end(), pop.begin(), pop.end());
      double worst = 0.0;
      for (int p = 0; p < 4; ++p) {
        PureProfile dev = flat;
        for (Action b : {H, T}) {
          dev[p] = b;
          worst = std::max(worst, dense.PurePayoff(p, dev) - dense.PurePayoff(p, flat));
        }
      }
      EXPECT_NEAR(v.Regret(a).max_regret, worst, 1e-12);
    });
  }
}

TEST(CorrespondenceTest, ForwardDirectionHoldsExhaustively) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Game u = RandomGame(1000 + seed, 2, 2);
    ForEachLifted(2, 2, 2, [&](const LiftedPureProfile& a) {
      for (double eps : {0.0, 0.1, 0.5}) {
        const CorrespondenceVerdict c = VerifyCorrespondence(u, 2, eps, a);
        if (c.lifted_equilibrium) EXPECT_TRUE(c.projected_equilibrium);
        // The projected regret averages the lifted members' regrets.
        EXPECT_LE(c.projected_max_regret, c.lifted_max_regret + 1e-12);
      }
    });
  }
}

TEST(CorrespondenceTest, ConverseHoldsAtZeroEpsilon) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Game u = RandomGame(2000 + seed, 2, 3);
    ForEachLifted(2, 3, 2, [&](const LiftedPureProfile& a) {
      const CorrespondenceVerdict c = VerifyCorrespondence(u, 2, 0.0, a);
      if (c.projected_equilibrium) EXPECT_TRUE(c.lifted_equilibrium);
    });
  }
}

// With positive epsilon the converse fails: player 0 earns 1 on action 0 and
// 0.8 on action 1 whatever the opponent does. At the 2-uniform profile
// ({0, 1}, {0, 1}) its regret in u is 0.1, but the clone on action 1 has
// regret 0.2 in v.
TEST(CorrespondenceTest, ConverseFailsForPositiveEpsilon) {
  const Game u = Game::Dense(2, 2, {{1.0, 1.0, 0.8, 0.8}, {0.5, 0.5, 0.5, 0.5}});
  const KUniformProfile x(2, {{0, 1}, {0, 1}});
  const CorrespondenceVerdict c = VerifyCorrespondence(u, 0.1, x);
  EXPECT_TRUE(c.projected_equilibrium);
  EXPECT_NEAR(c.projected_max_regret, 0.1, 1e-12);
  EXPECT_FALSE(c.lifted_equilibrium);
  EXPECT_NEAR(c.lifted_max_regret, 0.2, 1e-12);
  // Every ordering of the populations is an ordered representative; none of
  // them is a 0.1-equilibrium of v.
  for (const auto& a : std::vector<LiftedPureProfile>{
           {{{0, 1}, {0, 1}}}, {{{1, 0}, {0, 1}}}, {{{0, 1}, {1, 0}}}, {{{1, 0}, {1, 0}}}}) {
    EXPECT_FALSE(VerifyCorrespondence(u, 2, 0.1, a).lifted_equilibrium);
  }
}

TEST(LipschitzOfLiftTest, AtMostOneOverK) {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 2; m <= 3; ++m) {
      for (int k = 1; k <= 3; ++k) {
        if (n * k > 6 && m == 3) continue;  // keep the materialized lift small
        const Game u = RandomGame(10 * n + m + 100 * k, n, m);
        const Game v = LiftedGame(u, k).Materialize();
        EXPECT_LE(LipschitzConstant(v), 1.0 / k + 1e-12) << n << m << k;
      }
    }
  }
}

}  // namespace
}  // namespace kuniform
