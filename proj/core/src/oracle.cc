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
#include "kuniform/oracle.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "kuniform/analysis.h"
#include "kuniform/bounds.h"
#include "kuniform/errors.h"
#include "kuniform/random.h"

namespace kuniform {
namespace {

// All vectors of `parts` nonnegative integers summing to `total`, in
// lexicographic order.
void Compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int c = 0; c <= total; ++c) {
    prefix.push_back(c);
    Compositions(total - c, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Inverse-CDF sampler for one probability vector.
class Categorical {
 public:
  explicit Categorical(std::span<const double> probabilities) {
    double sum = 0.0;
    for (double p : probabilities) {
      sum += p;
      cumulative_.push_back(sum);
    }
    cumulative_.back() = std::numeric_limits<double>::infinity();
  }
  Action Draw(SplitMix64& rng) const {
    const double u = rng.NextDouble();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<Action>(it - cumulative_.begin());
  }

 private:
  std::vector<double> cumulative_;
};

constexpr std::uint64_t kTrialBlock = 4096;

// Counts hits of `trial(rng) -> payoff` within delta of the reference,
// over query.trials draws split into independently seeded blocks.
template <typename MakeTrial>
std::uint64_t CountHits(const ConcentrationQuery& query, double reference,
                        MakeTrial&& make_trial) {
  const std::uint64_t num_blocks =
      (query.trials + kTrialBlock - 1) / kTrialBlock;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> hits{0};
  auto worker = [&] {
    auto trial = make_trial();
    std::uint64_t local = 0;
    while (true) {
      const std::uint64_t block = next.fetch_add(1);
      if (block >= num_blocks) break;
      SplitMix64 rng(MixSeed(query.seed, block));
      const std::uint64_t count =
          std::min(kTrialBlock, query.trials - block * kTrialBlock);
      for (std::uint64_t t = 0; t < count; ++t) {
        if (std::abs(trial(rng) - reference) <= query.delta + kTolerance) {
          ++local;
        }
      }
    }
    hits.fetch_add(local);
  };
  const int threads = static_cast<int>(std::min<std::uint64_t>(
      std::max(1, query.threads), num_blocks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return hits.load();
}

void CheckQuery(const ConcentrationQuery& query, int num_players,
                int num_actions) {
  if (query.player < 0 || query.player >= num_players) {
    throw InvalidArgument("query player out of range");
  }
  if (query.action < 0 || query.action >= num_actions) {
    throw InvalidArgument("query action out of range");
  }
  if (!(query.delta >= 0.0)) throw InvalidArgument("delta must be nonnegative");
  if (query.trials < 1) throw InvalidArgument("trials must be positive");
  query.profile.CheckShape(num_players, num_actions);
}

ConcentrationResult Finish(const ConcentrationQuery& query, double reference,
                           int degree, double lambda, std::uint64_t hits) {
  ConcentrationResult result;
  result.trials = query.trials;
  result.hits = hits;
  result.frequency = static_cast<double>(hits) / query.trials;
  result.reference_payoff = reference;
  result.degree = degree;
  result.lipschitz = lambda;
  result.bound = ConcentrationBound(query.delta, degree, lambda);
  result.slack = 3.0 * std::sqrt(0.25 / query.trials);
  return result;
}

}  // namespace

std::vector<PureProfile> BruteForcePureEquilibria(const Game& game,
                                                  double epsilon,
                                                  std::uint64_t budget) {
  const std::uint64_t size = game.num_pure_profiles();
  if (size > budget) {
    throw BudgetExceeded("pure enumeration needs " + std::to_string(size) +
                         " profiles");
  }
  const int n = game.num_players();
  const int m = game.num_actions();
  std::vector<PureProfile> result;
  PureProfile a(n, 0);
  PureProfile deviated(n);
  for (std::uint64_t index = 0; index < size; ++index) {
    bool equilibrium = true;
    for (int i = 0; i < n && equilibrium; ++i) {
      const double current = game.PurePayoff(i, a);
      deviated = a;
      for (Action b = 0; b < m; ++b) {
        deviated[i] = b;
        if (game.PurePayoff(i, deviated) - current > epsilon + kTolerance) {
          equilibrium = false;
          break;
        }
      }
    }
    if (equilibrium) result.push_back(a);
    for (int p = n - 1; p >= 0; --p) {
      if (++a[p] < m) break;
      a[p] = 0;
    }
  }
  return result;
}

GridOracleResult GridEquilibriumOracle(const Game& game, int denominator,
                                       double epsilon, std::uint64_t budget) {
  if (denominator < 1) throw InvalidArgument("grid denominator must be positive");
  const int n = game.num_players();
  const int m = game.num_actions();
  std::vector<std::vector<int>> points;
  std::vector<int> prefix;
  Compositions(denominator, m, prefix, points);
  const std::uint64_t total = SaturatingPow(points.size(), n);
  if (total > budget) {
    throw BudgetExceeded("grid has " + std::to_string(total) + " profiles");
  }

  auto to_strategy = [&](const std::vector<int>& c) {
    std::vector<double> s(m);
    for (int a = 0; a < m; ++a) s[a] = static_cast<double>(c[a]) / denominator;
    return s;
  };

  std::vector<std::size_t> cursor(n, 0);
  std::optional<GridOracleResult> best;
  for (std::uint64_t index = 0; index < total; ++index) {
    std::vector<std::vector<double>> strategies;
    for (int i = 0; i < n; ++i) strategies.push_back(to_strategy(points[cursor[i]]));
    MixedProfile x(std::move(strategies));
    const double regret = Regret(game, x).max_regret;
    if (!best || regret < best->max_regret) {
      best = GridOracleResult{std::move(x), regret, false, total};
    }
    for (int p = n - 1; p >= 0; --p) {
      if (++cursor[p] < points.size()) break;
      cursor[p] = 0;
    }
  }
  best->meets_epsilon = best->max_regret <= epsilon + kTolerance;
  return *std::move(best);
}

ConcentrationResult EmpiricalConcentration(const Game& game,
                                           const ConcentrationQuery& query) {
  CheckQuery(query, game.num_players(), game.num_actions());
  const int i = query.player;
  int degree = 0;
  if (query.degree) {
    degree = *query.degree;
  } else {
    const DependencyStructure deps = Dependencies(game);
    degree = static_cast<int>(deps.dependencies[i].size() - deps.vacuous[i].size());
  }
  const double lambda =
      query.lipschitz ? *query.lipschitz : LipschitzConstant(game);
  // Fail fast on an inapplicable bound before spending the trials.
  ConcentrationBound(query.delta, degree, lambda);

  const double reference =
      DeviationPayoffs(game, i, query.profile)[query.action];
  const auto& axes = game.table(i).axes;
  const std::uint64_t hits = CountHits(query, reference, [&] {
    std::vector<Categorical> samplers;
    for (int j : axes) samplers.emplace_back(query.profile.strategy(j));
    PureProfile a(game.num_players(), 0);
    return [&game, &axes, &query, i, samplers = std::move(samplers),
            a = std::move(a)](SplitMix64& rng) mutable {
      for (std::size_t t = 0; t < axes.size(); ++t) {
        a[axes[t]] = axes[t] == i ? query.action : samplers[t].Draw(rng);
      }
      return game.PurePayoff(i, a);
    };
  });
  return Finish(query, reference, degree, lambda, hits);
}

ConcentrationResult EmpiricalConcentration(const LiftedGame& game,
                                           const ConcentrationQuery& query) {
  CheckQuery(query, game.num_players(), game.num_actions());
  const Game& base = game.base();
  const int k = game.k();
  const int m = game.num_actions();
  const int population = game.PlayerAt(query.player).population;

  int degree = 0;
  if (query.degree) {
    degree = *query.degree;
  } else {
    const DependencyStructure deps = Dependencies(base);
    degree = k * static_cast<int>(deps.dependencies[population].size() -
                                  deps.vacuous[population].size());
  }
  const double lambda = query.lipschitz ? *query.lipschitz : 1.0 / k;
  ConcentrationBound(query.delta, degree, lambda);

  // Independent members make the expected lifted payoff the base payoff at
  // the population means.
  const MixedProfile means =
      PopulationMeans(query.profile, base.num_players(), k);
  const double reference =
      DeviationPayoffs(base, population, means)[query.action];

  std::vector<int> opponents;
  for (int j : base.table(population).axes) {
    if (j != population) opponents.push_back(j);
  }
  const std::uint64_t hits = CountHits(query, reference, [&] {
    std::vector<std::vector<Categorical>> samplers(base.num_players());
    for (int j : opponents) {
      for (int member = 0; member < k; ++member) {
        samplers[j].emplace_back(query.profile.strategy(game.Index({j, member})));
      }
    }
    return [&base, &opponents, &means, &query, population, k, m,
            samplers = std::move(samplers)](SplitMix64& rng) {
      std::vector<std::vector<double>> aggregate = means.strategies();
      for (int j : opponents) {
        std::vector<double>& s = aggregate[j];
        std::fill(s.begin(), s.end(), 0.0);
        for (int member = 0; member < k; ++member) {
          s[samplers[j][member].Draw(rng)] += 1.0;
        }
        for (int a = 0; a < m; ++a) s[a] /= k;
      }
      return DeviationPayoffs(base, population,
                              MixedProfile(std::move(aggregate)))[query.action];
    };
  });
  return Finish(query, reference, degree, lambda, hits);
}

}  // namespace kuniform
