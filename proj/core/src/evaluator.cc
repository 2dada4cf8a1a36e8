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

#include <algorithm>
#include <numeric>

#include "kuniform/errors.h"

namespace kuniform {

DeviationEvaluator::DeviationEvaluator(const Game& game)
    : game_(&game),
      players_(game.num_players()),
      plans_(game.num_players()),
      position_(game.num_players()),
      check_order_(game.num_players()) {
  const int n = game.num_players();
  const int m = game.num_actions();
  std::iota(check_order_.begin(), check_order_.end(), 0);
  for (int i = 0; i < n; ++i) {
    players_[i].probabilities.assign(m, 0.0);
    players_[i].probabilities[0] = 1.0;
    players_[i].support = {0};

    const LocalTable& table = game.table(i);
    const int num_axes = static_cast<int>(table.axes.size());
    const int own = game.own_axis(i);
    Plan& plan = plans_[i];

    // Table positions sorted by player, own axis last.
    std::vector<int> positions;
    for (int t = 0; t < num_axes; ++t) {
      if (t != own) positions.push_back(t);
    }
    std::sort(positions.begin(), positions.end(), [&](int a, int b) {
      return table.axes[a] < table.axes[b];
    });
    for (int t : positions) plan.order.push_back(table.axes[t]);
    positions.push_back(own);

    std::vector<std::uint64_t> src_strides(num_axes, 1);
    for (int t = num_axes - 2; t >= 0; --t) src_strides[t] = src_strides[t + 1] * m;

    plan.permuted.resize(table.values.size());
    std::vector<int> coord(num_axes, 0);
    for (std::size_t dst = 0; dst < plan.permuted.size(); ++dst) {
      std::uint64_t src = 0;
      for (int q = 0; q < num_axes; ++q) src += src_strides[positions[q]] * coord[q];
      plan.permuted[dst] = table.values[src];
      for (int q = num_axes - 1; q >= 0; --q) {
        if (++coord[q] < m) break;
        coord[q] = 0;
      }
    }

    const int d = static_cast<int>(plan.order.size());
    plan.levels.resize(d);
    std::size_t size = plan.permuted.size();
    for (int t = 0; t < d; ++t) {
      size /= m;
      plan.levels[t].assign(size, 0.0);
    }
    for (int t = 0; t < d; ++t) position_[plan.order[t]].emplace_back(i, t);
  }
}

void DeviationEvaluator::SetStrategy(int player,
                                     std::span<const double> probabilities) {
  PlayerState& state = players_[player];
  if (static_cast<int>(probabilities.size()) != game_->num_actions()) {
    throw InvalidArgument("strategy length does not match the game");
  }
  state.probabilities.assign(probabilities.begin(), probabilities.end());
  state.support.clear();
  for (int a = 0; a < game_->num_actions(); ++a) {
    if (probabilities[a] > 0.0) state.support.push_back(a);
  }
  for (const auto& [i, t] : position_[player]) {
    plans_[i].valid = std::min(plans_[i].valid, t);
  }
}

void DeviationEvaluator::SetCounts(int player, std::span<const int> counts,
                                   int k) {
  PlayerState& state = players_[player];
  const double inv_k = 1.0 / k;
  state.support.clear();
  for (int a = 0; a < game_->num_actions(); ++a) {
    state.probabilities[a] = counts[a] * inv_k;
    if (counts[a] > 0) state.support.push_back(a);
  }
  for (const auto& [i, t] : position_[player]) {
    plans_[i].valid = std::min(plans_[i].valid, t);
  }
}

std::span<const double> DeviationEvaluator::Deviations(int player) {
  Plan& plan = plans_[player];
  const int d = static_cast<int>(plan.order.size());
  if (d == 0) return plan.permuted;
  for (int t = plan.valid; t < d; ++t) {
    const std::vector<double>& in = t == 0 ? plan.permuted : plan.levels[t - 1];
    std::vector<double>& out = plan.levels[t];
    const std::size_t block = out.size();
    const PlayerState& opponent = players_[plan.order[t]];
    std::fill(out.begin(), out.end(), 0.0);
    for (int a : opponent.support) {
      const double p = opponent.probabilities[a];
      const double* src = in.data() + static_cast<std::size_t>(a) * block;
      for (std::size_t r = 0; r < block; ++r) out[r] += p * src[r];
    }
  }
  plan.valid = d;
  return plan.levels[d - 1];
}

double DeviationEvaluator::PlayerRegret(int player) {
  const auto dev = Deviations(player);
  const PlayerState& state = players_[player];
  double current = 0.0;
  for (int a : state.support) current += state.probabilities[a] * dev[a];
  const double best = *std::max_element(dev.begin(), dev.end());
  return std::max(0.0, best - current);
}

double DeviationEvaluator::MaxRegret() {
  double worst = 0.0;
  for (int i = 0; i < game_->num_players(); ++i) {
    worst = std::max(worst, PlayerRegret(i));
  }
  return worst;
}

bool DeviationEvaluator::IsEpsilonEquilibrium(double epsilon) {
  for (std::size_t q = 0; q < check_order_.size(); ++q) {
    const int i = check_order_[q];
    if (PlayerRegret(i) > epsilon + kTolerance) {
      std::rotate(check_order_.begin(), check_order_.begin() + q,
                  check_order_.begin() + q + 1);
      return false;
    }
  }
  return true;
}

}  // namespace kuniform
