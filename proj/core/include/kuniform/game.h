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
#ifndef KUNIFORM_GAME_H_
#define KUNIFORM_GAME_H_

#include <cstdint>
#include <span>
#include <vector>

namespace kuniform {

// Absolute tolerance used by every payoff comparison in the library.
inline constexpr double kTolerance = 1e-9;

// Default cap on the number of payoff terms touched by one exact evaluation.
inline constexpr std::uint64_t kDefaultEvaluationBudget = 100'000'000;

// Actions and players are 0-based throughout.
using Action = int;
using PureProfile = std::vector<Action>;

// Payoffs of one player over the joint actions of `axes` (player indices),
// stored row-major with axes[0] as the slowest axis.
struct LocalTable {
  std::vector<int> axes;
  std::vector<double> values;
};

// An n-player normal-form game with m actions per player and payoffs in
// [0,1]. Two storage forms share one internal representation:
//
//   dense:     table(i).axes == {0, 1, ..., n-1}; player 0 is the slowest axis.
//   graphical: table(i).axes == {i, D_i...}; own action is the slowest axis,
//              followed by the declared dependencies in declaration order.
//
// Games are immutable after construction.
class Game {
 public:
  enum class Form { kDense, kGraphical };

  // payoffs[i] holds m^n values for player i.
  static Game Dense(int num_players, int num_actions,
                    std::vector<std::vector<double>> payoffs);

  // dependencies[i] lists the players whose actions player i's payoff reads;
  // tables[i] holds m^(|dependencies[i]| + 1) values.
  static Game Graphical(int num_players, int num_actions,
                        std::vector<std::vector<int>> dependencies,
                        std::vector<std::vector<double>> tables);

  int num_players() const { return num_players_; }
  int num_actions() const { return num_actions_; }
  Form form() const { return form_; }
  bool is_dense() const { return form_ == Form::kDense; }

  const LocalTable& table(int player) const { return tables_[player]; }

  // Position of the player's own action within table(player).axes.
  int own_axis(int player) const { return is_dense() ? player : 0; }

  // Declared dependencies: every other player for dense games, D_i otherwise.
  std::span<const int> declared_dependencies(int player) const {
    return dependencies_[player];
  }

  // Number of pure profiles m^n, saturating at UINT64_MAX.
  std::uint64_t num_pure_profiles() const;

  double PurePayoff(int player, std::span<const Action> profile) const;

  // Expands a graphical game into dense form. Throws BudgetExceeded when
  // n * m^n exceeds the budget.
  Game ToDense(std::uint64_t budget = kDefaultEvaluationBudget) const;

 private:
  Game(int num_players, int num_actions, Form form,
       std::vector<std::vector<int>> dependencies,
       std::vector<LocalTable> tables);

  int num_players_ = 0;
  int num_actions_ = 0;
  Form form_ = Form::kDense;
  std::vector<std::vector<int>> dependencies_;
  std::vector<LocalTable> tables_;
  // Row-major strides for each table, cached for PurePayoff.
  std::vector<std::vector<std::uint64_t>> strides_;
};

// m^e with saturation at UINT64_MAX.
std::uint64_t SaturatingPow(std::uint64_t base, int exponent);
std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b);

}  // namespace kuniform

#endif  // KUNIFORM_GAME_H_
