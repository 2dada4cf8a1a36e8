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
#include "kuniform/game.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "kuniform/errors.h"

namespace kuniform {

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t SaturatingPow(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int e = 0; e < exponent; ++e) result = SaturatingMul(result, base);
  return result;
}

namespace {

void CheckPayoffs(const std::vector<double>& values, int player) {
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw InvalidArgument("payoff " + std::to_string(v) + " of player " +
                            std::to_string(player) + " is outside [0,1]");
    }
  }
}

}  // namespace

Game::Game(int num_players, int num_actions, Form form,
           std::vector<std::vector<int>> dependencies,
           std::vector<LocalTable> tables)
    : num_players_(num_players),
      num_actions_(num_actions),
      form_(form),
      dependencies_(std::move(dependencies)),
      tables_(std::move(tables)) {
  strides_.resize(tables_.size());
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto& axes = tables_[i].axes;
    auto& strides = strides_[i];
    strides.assign(axes.size(), 1);
    for (int t = static_cast<int>(axes.size()) - 2; t >= 0; --t) {
      strides[t] = strides[t + 1] * static_cast<std::uint64_t>(num_actions_);
    }
  }
}

Game Game::Dense(int num_players, int num_actions,
                 std::vector<std::vector<double>> payoffs) {
  if (num_players < 1 || num_actions < 1) {
    throw InvalidArgument("a game needs at least one player and one action");
  }
  if (static_cast<int>(payoffs.size()) != num_players) {
    throw InvalidArgument("expected one payoff tensor per player");
  }
  const std::uint64_t size = SaturatingPow(num_actions, num_players);
  std::vector<int> all(num_players);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> deps(num_players);
  std::vector<LocalTable> tables(num_players);
  for (int i = 0; i < num_players; ++i) {
    if (payoffs[i].size() != size) {
      throw InvalidArgument("payoff tensor of player " + std::to_string(i) +
                            " has " + std::to_string(payoffs[i].size()) +
                            " entries, expected " + std::to_string(size));
    }
    CheckPayoffs(payoffs[i], i);
    for (int j = 0; j < num_players; ++j) {
      if (j != i) deps[i].push_back(j);
    }
    tables[i] = LocalTable{all, std::move(payoffs[i])};
  }
  return Game(num_players, num_actions, Form::kDense, std::move(deps),
              std::move(tables));
}

Game Game::Graphical(int num_players, int num_actions,
                     std::vector<std::vector<int>> dependencies,
                     std::vector<std::vector<double>> tables) {
  if (num_players < 1 || num_actions < 1) {
    throw InvalidArgument("a game needs at least one player and one action");
  }
  if (static_cast<int>(dependencies.size()) != num_players ||
      static_cast<int>(tables.size()) != num_players) {
    throw InvalidArgument("expected one dependency list and table per player");
  }
  std::vector<LocalTable> local(num_players);
  for (int i = 0; i < num_players; ++i) {
    std::vector<bool> seen(num_players, false);
    seen[i] = true;
    std::vector<int> axes{i};
    for (int j : dependencies[i]) {
      if (j < 0 || j >= num_players || seen[j]) {
        throw InvalidArgument("player " + std::to_string(i) +
                              " has an invalid or repeated dependency " +
                              std::to_string(j));
      }
      seen[j] = true;
      axes.push_back(j);
    }
    const std::uint64_t size =
        SaturatingPow(num_actions, static_cast<int>(axes.size()));
    if (tables[i].size() != size) {
      throw InvalidArgument("local table of player " + std::to_string(i) +
                            " has " + std::to_string(tables[i].size()) +
                            " entries, expected " + std::to_string(size));
    }
    CheckPayoffs(tables[i], i);
    local[i] = LocalTable{std::move(axes), std::move(tables[i])};
  }
  return Game(num_players, num_actions, Form::kGraphical,
              std::move(dependencies), std::move(local));
}

std::uint64_t Game::num_pure_profiles() const {
  return SaturatingPow(num_actions_, num_players_);
}

double Game::PurePayoff(int player, std::span<const Action> profile) const {
  const auto& table = tables_[player];
  const auto& strides = strides_[player];
  std::uint64_t offset = 0;
  for (std::size_t t = 0; t < table.axes.size(); ++t) {
    offset += strides[t] * static_cast<std::uint64_t>(profile[table.axes[t]]);
  }
  return table.values[offset];
}

Game Game::ToDense(std::uint64_t budget) const {
  if (is_dense()) return *this;
  const std::uint64_t size = num_pure_profiles();
  if (SaturatingMul(size, num_players_) > budget) {
    throw BudgetExceeded("dense expansion needs " + std::to_string(num_players_) +
                         " x " + std::to_string(size) + " entries");
  }
  std::vector<std::vector<double>> payoffs(num_players_,
                                           std::vector<double>(size));
  PureProfile a(num_players_, 0);
  for (std::uint64_t index = 0; index < size; ++index) {
    for (int i = 0; i < num_players_; ++i) payoffs[i][index] = PurePayoff(i, a);
    for (int p = num_players_ - 1; p >= 0; --p) {
      if (++a[p] < num_actions_) break;
      a[p] = 0;
    }
  }
  return Dense(num_players_, num_actions_, std::move(payoffs));
}

}  // namespace kuniform
