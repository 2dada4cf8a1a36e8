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
#ifndef KUNIFORM_ORACLE_H_
#define KUNIFORM_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "kuniform/game.h"
#include "kuniform/lift.h"
#include "kuniform/profile.h"

namespace kuniform {

// Ground-truth generators. Everything here goes through the direct
// support-product evaluator in analysis.h, never through the incremental
// DeviationEvaluator used by the search code.

// All pure profiles with max regret <= eps + kTolerance, in lexicographic
// order (player 0 slowest). Throws BudgetExceeded when m^n exceeds the budget.
std::vector<PureProfile> BruteForcePureEquilibria(
    const Game& game, double epsilon,
    std::uint64_t budget = kDefaultEvaluationBudget);

struct GridOracleResult {
  MixedProfile best;
  double max_regret = 0.0;
  bool meets_epsilon = false;
  std::uint64_t grid_points = 0;
};

// Scans every profile whose probabilities are multiples of 1/denominator and
// returns the first one of minimum max-regret. With denominator k this is
// exactly the set of k-uniform profiles.
GridOracleResult GridEquilibriumOracle(
    const Game& game, int denominator, double epsilon,
    std::uint64_t budget = kDefaultEvaluationBudget);

// Estimate of the probability of
//   B = { a_{-i} : |u_i(a_i, a_{-i}) - u_i(a_i, x_{-i})| <= delta }
// when a_{-i} is drawn from x_{-i}.
struct ConcentrationQuery {
  // Base player index, or the flat lifted index when querying a lifted game.
  int player = 0;
  Action action = 0;
  // Full mixed profile; the queried player's own entry is ignored.
  MixedProfile profile{std::vector<std::vector<double>>{}};
  double delta = 0.0;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  int threads = 1;
  // Dependency count and Lipschitz constant used in the analytic bound.
  // Computed from the game when absent.
  std::optional<int> degree;
  std::optional<double> lipschitz;
};

struct ConcentrationResult {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double frequency = 0.0;
  double reference_payoff = 0.0;
  int degree = 0;
  double lipschitz = 0.0;
  double bound = 0.0;
  // 3 * sqrt(1/4 / trials), the worst-case Bernoulli three-sigma slack.
  double slack = 0.0;

  bool Consistent() const { return frequency >= bound - slack; }
};

ConcentrationResult EmpiricalConcentration(const Game& game,
                                           const ConcentrationQuery& query);

// Lifted version: the profile has one entry per lifted player. Defaults are
// degree = k * (effective dependencies of the player's population) and
// lambda = 1/k.
ConcentrationResult EmpiricalConcentration(const LiftedGame& game,
                                           const ConcentrationQuery& query);

}  // namespace kuniform

#endif  // KUNIFORM_ORACLE_H_
