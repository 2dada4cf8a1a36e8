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
#ifndef KUNIFORM_ANALYSIS_H_
#define KUNIFORM_ANALYSIS_H_

#include <cstdint>
#include <vector>

#include "kuniform/game.h"
#include "kuniform/profile.h"

namespace kuniform {

// Exact multilinear extension u_i(x). The sum runs over the product of the
// support sizes of the players table(i) reads; BudgetExceeded is thrown when
// that product exceeds `budget`.
double ExpectedPayoff(const Game& game, int player, const MixedProfile& x,
                      std::uint64_t budget = kDefaultEvaluationBudget);

// u_i(b, x_{-i}) for every pure action b of `player`. The player's own
// entry of x is ignored.
std::vector<double> DeviationPayoffs(
    const Game& game, int player, const MixedProfile& x,
    std::uint64_t budget = kDefaultEvaluationBudget);

struct PlayerRegret {
  double payoff = 0.0;
  double best_response_value = 0.0;
  Action best_response = 0;
  double regret = 0.0;
};

struct RegretReport {
  std::vector<PlayerRegret> players;
  double max_regret = 0.0;

  // Weak inequality: max regret <= epsilon + kTolerance.
  bool IsEpsilonEquilibrium(double epsilon) const {
    return max_regret <= epsilon + kTolerance;
  }
};

RegretReport Regret(const Game& game, const MixedProfile& x,
                    std::uint64_t budget = kDefaultEvaluationBudget);

inline bool IsEpsilonEquilibrium(const Game& game, const MixedProfile& x,
                                 double epsilon,
                                 std::uint64_t budget = kDefaultEvaluationBudget) {
  return Regret(game, x, budget).IsEpsilonEquilibrium(epsilon);
}

struct DependencyStructure {
  // dependencies[i]: players j != i such that some single change of a_j
  // changes u_i. For graphical games these are the declared D_i.
  std::vector<std::vector<int>> dependencies;
  // Declared graphical dependencies that never change the payoff. Always
  // empty for dense games.
  std::vector<std::vector<int>> vacuous;
  int degree = 0;

  // Degree after dropping vacuous declarations.
  int EffectiveDegree() const;
};

// Exhaustive scan over every single-player change of every table. Throws
// BudgetExceeded when the number of comparisons exceeds the budget.
DependencyStructure Dependencies(const Game& game,
                                 std::uint64_t budget = kDefaultEvaluationBudget);

// Smallest lambda with |u_i(a_j, a_{-j}) - u_i(a'_j, a_{-j})| <= lambda for
// all i != j. Zero for one-player games.
double LipschitzConstant(const Game& game,
                         std::uint64_t budget = kDefaultEvaluationBudget);

}  // namespace kuniform

#endif  // KUNIFORM_ANALYSIS_H_
