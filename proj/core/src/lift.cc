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
#include <string>
#include <utility>

#include "kuniform/errors.h"

namespace kuniform {
namespace {

MixedProfile AggregateOf(const LiftedPureProfile& a, int num_actions, int k) {
  std::vector<std::vector<double>> strategies;
  strategies.reserve(a.populations.size());
  for (const auto& population : a.populations) {
    std::vector<double> s(num_actions, 0.0);
    for (Action b : population) s[b] += 1.0;
    for (double& p : s) p /= k;
    strategies.push_back(std::move(s));
  }
  return MixedProfile(std::move(strategies));
}

}  // namespace

LiftedGame::LiftedGame(const Game& base, int k) : base_(&base), k_(k) {
  if (k < 1) throw InvalidArgument("lift size k must be positive");
}

void LiftedGame::CheckProfile(const LiftedPureProfile& a) const {
  if (static_cast<int>(a.populations.size()) != num_populations()) {
    throw InvalidArgument("lifted profile has " +
                          std::to_string(a.populations.size()) +
                          " populations, expected " +
                          std::to_string(num_populations()));
  }
  for (const auto& population : a.populations) {
    if (static_cast<int>(population.size()) != k_) {
      throw InvalidArgument("population of size " +
                            std::to_string(population.size()) +
                            ", expected " + std::to_string(k_));
    }
    for (Action b : population) {
      if (b < 0 || b >= num_actions()) {
        throw InvalidArgument("lifted action out of range");
      }
    }
  }
}

double LiftedGame::Payoff(LiftedPlayer who, const LiftedPureProfile& a,
                          std::uint64_t budget) const {
  CheckProfile(a);
  if (who.population < 0 || who.population >= num_populations() ||
      who.member < 0 || who.member >= k_) {
    throw InvalidArgument("lifted player out of range");
  }
  const MixedProfile aggregate = AggregateOf(a, num_actions(), k_);
  const std::vector<double> dev =
      DeviationPayoffs(*base_, who.population, aggregate, budget);
  return dev[a.populations[who.population][who.member]];
}

RegretReport LiftedGame::Regret(const LiftedPureProfile& a,
                                std::uint64_t budget) const {
  CheckProfile(a);
  const MixedProfile aggregate = AggregateOf(a, num_actions(), k_);
  RegretReport report;
  report.players.resize(num_players());
  for (int i = 0; i < num_populations(); ++i) {
    const std::vector<double> dev =
        DeviationPayoffs(*base_, i, aggregate, budget);
    const auto best = std::max_element(dev.begin(), dev.end());
    for (int j = 0; j < k_; ++j) {
      PlayerRegret& r = report.players[Index({i, j})];
      r.payoff = dev[a.populations[i][j]];
      r.best_response = static_cast<Action>(best - dev.begin());
      r.best_response_value = *best;
      r.regret = std::max(0.0, *best - r.payoff);
      report.max_regret = std::max(report.max_regret, r.regret);
    }
  }
  return report;
}

Game LiftedGame::Materialize(std::uint64_t budget) const {
  const int players = num_players();
  const int m = num_actions();
  const std::uint64_t size = SaturatingPow(m, players);
  if (SaturatingMul(size, players) > budget) {
    throw BudgetExceeded("materializing v(u," + std::to_string(k_) +
                         ") needs " + std::to_string(players) + " x " +
                         std::to_string(size) + " entries");
  }
  std::vector<std::vector<double>> payoffs(players, std::vector<double>(size));
  LiftedPureProfile a;
  a.populations.assign(num_populations(), std::vector<Action>(k_, 0));
  for (std::uint64_t index = 0; index < size; ++index) {
    const MixedProfile aggregate = AggregateOf(a, m, k_);
    for (int i = 0; i < num_populations(); ++i) {
      const std::vector<double> dev = DeviationPayoffs(*base_, i, aggregate);
      for (int j = 0; j < k_; ++j) {
        payoffs[Index({i, j})][index] = dev[a.populations[i][j]];
      }
    }
    // Advance in row-major order over the flat player index.
    for (int p = players - 1; p >= 0; --p) {
      Action& b = a.populations[p / k_][p % k_];
      if (++b < m) break;
      b = 0;
    }
  }
  return Game::Dense(players, m, std::move(payoffs));
}

KUniformProfile ProjectProfile(const LiftedPureProfile& a) {
  if (a.populations.empty()) throw InvalidArgument("empty lifted profile");
  const int k = static_cast<int>(a.populations.front().size());
  return KUniformProfile(k, a.populations);
}

LiftedPureProfile OrderedRepresentative(const KUniformProfile& profile) {
  return LiftedPureProfile{profile.multisets()};
}

MixedProfile LiftMixedProfile(const MixedProfile& x, int k) {
  if (k < 1) throw InvalidArgument("lift size k must be positive");
  std::vector<std::vector<double>> lifted;
  lifted.reserve(static_cast<std::size_t>(x.num_players()) * k);
  for (const auto& s : x.strategies()) {
    for (int j = 0; j < k; ++j) lifted.push_back(s);
  }
  return MixedProfile(std::move(lifted));
}

MixedProfile PopulationMeans(const MixedProfile& lifted, int num_populations,
                             int k) {
  if (lifted.num_players() != num_populations * k) {
    throw InvalidArgument("lifted profile does not have n*k players");
  }
  std::vector<std::vector<double>> means;
  means.reserve(num_populations);
  for (int i = 0; i < num_populations; ++i) {
    std::vector<double> mean(lifted.strategy(i * k).size(), 0.0);
    for (int j = 0; j < k; ++j) {
      const auto s = lifted.strategy(i * k + j);
      for (std::size_t a = 0; a < mean.size(); ++a) mean[a] += s[a];
    }
    for (double& p : mean) p /= k;
    means.push_back(std::move(mean));
  }
  return MixedProfile(std::move(means));
}

CorrespondenceVerdict VerifyCorrespondence(const Game& base, int k,
                                           double epsilon,
                                           const LiftedPureProfile& a,
                                           std::uint64_t budget) {
  const LiftedGame lifted(base, k);
  CorrespondenceVerdict verdict;
  verdict.lifted_max_regret = lifted.Regret(a, budget).max_regret;
  verdict.lifted_equilibrium = verdict.lifted_max_regret <= epsilon + kTolerance;
  const MixedProfile projected =
      Aggregate(ProjectProfile(a), base.num_actions());
  verdict.projected_max_regret = Regret(base, projected, budget).max_regret;
  verdict.projected_equilibrium =
      verdict.projected_max_regret <= epsilon + kTolerance;
  return verdict;
}

CorrespondenceVerdict VerifyCorrespondence(const Game& base, double epsilon,
                                           const KUniformProfile& profile,
                                           std::uint64_t budget) {
  return VerifyCorrespondence(base, profile.k(), epsilon,
                              OrderedRepresentative(profile), budget);
}

}  // namespace kuniform
