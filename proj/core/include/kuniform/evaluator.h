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
#ifndef KUNIFORM_EVALUATOR_H_
#define KUNIFORM_EVALUATOR_H_

#include <span>
#include <vector>

#include "kuniform/game.h"

namespace kuniform {

// Incremental evaluator of deviation payoffs u_i(b, x_{-i}) for a profile that
// changes one player at a time.
//
// Each player's table is permuted once so that the opponents it reads come
// first, in increasing player order, and its own action is the last (fastest)
// axis. u_i(., x_{-i}) is then obtained by contracting the opponent axes one
// at a time, and every partial contraction is cached. Changing player p's
// strategy only invalidates the cached levels at or after p's position, so a
// nested enumeration with the last player innermost recomputes one m x m
// contraction per step for most players.
//
// Not thread-safe; give each worker its own instance over the shared game.
class DeviationEvaluator {
 public:
  explicit DeviationEvaluator(const Game& game);

  const Game& game() const { return *game_; }

  void SetStrategy(int player, std::span<const double> probabilities);
  // Convenience for k-uniform strategies: probabilities counts[a] / k.
  void SetCounts(int player, std::span<const int> counts, int k);

  std::span<const double> strategy(int player) const {
    return players_[player].probabilities;
  }

  // u_i(b, x_{-i}) for every b.
  std::span<const double> Deviations(int player);

  // Best-response value minus current payoff, clamped at 0.
  double PlayerRegret(int player);
  double MaxRegret();

  // Early-exit check: max regret <= epsilon + kTolerance.
  bool IsEpsilonEquilibrium(double epsilon);

 private:
  struct PlayerState {
    std::vector<double> probabilities;
    std::vector<int> support;
  };
  struct Plan {
    // Opponents read by the table, increasing.
    std::vector<int> order;
    // Table with axes (order..., own).
    std::vector<double> permuted;
    // levels[t] = permuted contracted over order[0..t]; size m^(d-t).
    std::vector<std::vector<double>> levels;
    // Number of valid entries of levels.
    int valid = 0;
  };

  const Game* game_;
  std::vector<PlayerState> players_;
  std::vector<Plan> plans_;
  // position_[p] lists (player i, index of p in plans_[i].order).
  std::vector<std::vector<std::pair<int, int>>> position_;
  // Players checked first by IsEpsilonEquilibrium; the last failing player
  // moves to the front.
  std::vector<int> check_order_;
};

}  // namespace kuniform

#endif  // KUNIFORM_EVALUATOR_H_
