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
#include "kuniform/analysis.h"

#include <algorithm>
#include <string>

#include "kuniform/errors.h"

namespace kuniform {
namespace {

// Sums u_i(b, x_{-i}) over the opponents' support product for each b in
// `own_actions`. Entries of the result for other actions stay zero.
std::vector<double> DeviationsOver(const Game& game, int player,
                                   const MixedProfile& x,
                                   const std::vector<Action>& own_actions,
                                   std::uint64_t budget) {
  x.CheckShape(game.num_players(), game.num_actions());
  const int m = game.num_actions();
  const LocalTable& table = game.table(player);
  const int own = game.own_axis(player);
  const int num_axes = static_cast<int>(table.axes.size());

  std::vector<std::uint64_t> strides(num_axes, 1);
  for (int t = num_axes - 2; t >= 0; --t) strides[t] = strides[t + 1] * m;

  // Supports of the opponents this table reads.
  std::vector<int> opponent_axes;
  std::vector<std::vector<Action>> supports;
  std::uint64_t terms = std::max<std::uint64_t>(own_actions.size(), 1);
  for (int t = 0; t < num_axes; ++t) {
    if (t == own) continue;
    std::vector<Action> support;
    const auto s = x.strategy(table.axes[t]);
    for (int a = 0; a < m; ++a) {
      if (s[a] > 0.0) support.push_back(a);
    }
    terms = SaturatingMul(terms, support.size());
    opponent_axes.push_back(t);
    supports.push_back(std::move(support));
  }
  if (terms > budget) {
    throw BudgetExceeded("exact evaluation needs " + std::to_string(terms) +
                         " terms, budget is " + std::to_string(budget));
  }

  std::vector<double> result(m, 0.0);
  std::vector<std::size_t> cursor(supports.size(), 0);
  while (true) {
    double prob = 1.0;
    std::uint64_t offset = 0;
    for (std::size_t q = 0; q < supports.size(); ++q) {
      const int t = opponent_axes[q];
      const Action a = supports[q][cursor[q]];
      prob *= x.strategy(table.axes[t])[a];
      offset += strides[t] * a;
    }
    for (Action b : own_actions) {
      result[b] += prob * table.values[offset + strides[own] * b];
    }
    std::size_t q = supports.size();
    while (q > 0) {
      --q;
      if (++cursor[q] < supports[q].size()) break;
      cursor[q] = 0;
      if (q == 0) return result;
    }
    if (supports.empty()) return result;
  }
}

std::vector<Action> AllActions(int m) {
  std::vector<Action> all(m);
  for (int a = 0; a < m; ++a) all[a] = a;
  return all;
}

// Visits every line of `table` along axis t: the m values that differ only
// in that coordinate. Returns max over lines of (max - min).
double MaxSpreadAlongAxis(const LocalTable& table, int t, int m) {
  const int num_axes = static_cast<int>(table.axes.size());
  std::uint64_t stride = 1;
  for (int s = num_axes - 1; s > t; --s) stride *= m;
  const std::uint64_t block = stride * m;
  const std::uint64_t num_blocks = table.values.size() / block;
  double spread = 0.0;
  for (std::uint64_t hi = 0; hi < num_blocks; ++hi) {
    for (std::uint64_t lo = 0; lo < stride; ++lo) {
      const std::uint64_t base = hi * block + lo;
      double low = table.values[base];
      double high = low;
      for (int a = 1; a < m; ++a) {
        const double v = table.values[base + a * stride];
        low = std::min(low, v);
        high = std::max(high, v);
      }
      spread = std::max(spread, high - low);
    }
  }
  return spread;
}

void CheckScanBudget(const Game& game, std::uint64_t budget) {
  std::uint64_t comparisons = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& table = game.table(i);
    comparisons += SaturatingMul(table.values.size(), table.axes.size());
    if (comparisons > budget) {
      throw BudgetExceeded("structural scan exceeds the budget of " +
                           std::to_string(budget) + " comparisons");
    }
  }
}

}  // namespace

double ExpectedPayoff(const Game& game, int player, const MixedProfile& x,
                      std::uint64_t budget) {
  x.CheckShape(game.num_players(), game.num_actions());
  std::vector<Action> support;
  const auto own = x.strategy(player);
  for (int a = 0; a < game.num_actions(); ++a) {
    if (own[a] > 0.0) support.push_back(a);
  }
  const std::vector<double> dev = DeviationsOver(game, player, x, support, budget);
  double value = 0.0;
  for (Action a : support) value += own[a] * dev[a];
  return value;
}

std::vector<double> DeviationPayoffs(const Game& game, int player,
                                     const MixedProfile& x,
                                     std::uint64_t budget) {
  return DeviationsOver(game, player, x, AllActions(game.num_actions()), budget);
}

RegretReport Regret(const Game& game, const MixedProfile& x,
                    std::uint64_t budget) {
  RegretReport report;
  report.players.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    const std::vector<double> dev = DeviationPayoffs(game, i, x, budget);
    PlayerRegret& r = report.players[i];
    const auto own = x.strategy(i);
    for (int a = 0; a < game.num_actions(); ++a) r.payoff += own[a] * dev[a];
    r.best_response = static_cast<Action>(
        std::max_element(dev.begin(), dev.end()) - dev.begin());
    r.best_response_value = dev[r.best_response];
    // Rounding can leave the average a hair above its maximum.
    r.regret = std::max(0.0, r.best_response_value - r.payoff);
    report.max_regret = std::max(report.max_regret, r.regret);
  }
  return report;
}

int DependencyStructure::EffectiveDegree() const {
  int degree = 0;
  for (std::size_t i = 0; i < dependencies.size(); ++i) {
    degree = std::max<int>(degree, static_cast<int>(dependencies[i].size() -
                                                    vacuous[i].size()));
  }
  return degree;
}

DependencyStructure Dependencies(const Game& game, std::uint64_t budget) {
  CheckScanBudget(game, budget);
  const int n = game.num_players();
  DependencyStructure result;
  result.dependencies.resize(n);
  result.vacuous.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& table = game.table(i);
    for (int t = 0; t < static_cast<int>(table.axes.size()); ++t) {
      const int j = table.axes[t];
      if (j == i) continue;
      const bool varies =
          MaxSpreadAlongAxis(table, t, game.num_actions()) > 0.0;
      if (game.is_dense()) {
        if (varies) result.dependencies[i].push_back(j);
      } else {
        result.dependencies[i].push_back(j);
        if (!varies) result.vacuous[i].push_back(j);
      }
    }
    result.degree = std::max<int>(
        result.degree, static_cast<int>(result.dependencies[i].size()));
  }
  return result;
}

double LipschitzConstant(const Game& game, std::uint64_t budget) {
  CheckScanBudget(game, budget);
  double lambda = 0.0;
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& table = game.table(i);
    for (int t = 0; t < static_cast<int>(table.axes.size()); ++t) {
      if (table.axes[t] == i) continue;
      lambda = std::max(lambda,
                        MaxSpreadAlongAxis(table, t, game.num_actions()));
    }
  }
  return lambda;
}

}  // namespace kuniform
