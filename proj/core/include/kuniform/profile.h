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
#ifndef KUNIFORM_PROFILE_H_
#define KUNIFORM_PROFILE_H_

#include <span>
#include <vector>

#include "kuniform/game.h"

namespace kuniform {

// One probability vector per player. Every vector is checked on
// construction: entries are nonnegative and sum to 1 within 1e-9.
class MixedProfile {
 public:
  explicit MixedProfile(std::vector<std::vector<double>> strategies);

  static MixedProfile Uniform(int num_players, int num_actions);
  static MixedProfile Pure(std::span<const Action> profile, int num_actions);

  int num_players() const { return static_cast<int>(strategies_.size()); }
  std::span<const double> strategy(int player) const {
    return strategies_[player];
  }
  const std::vector<std::vector<double>>& strategies() const {
    return strategies_;
  }

  // Throws InvalidArgument unless the profile has one m-vector per player.
  void CheckShape(int num_players, int num_actions) const;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  std::vector<std::vector<double>> strategies_;
};

// A k-uniform profile: one multiset of k actions per player, kept in
// canonical nondecreasing order.
class KUniformProfile {
 public:
  KUniformProfile(int k, std::vector<std::vector<Action>> multisets);

  // Builds the canonical multisets from per-player action multiplicities.
  static KUniformProfile FromCounts(int k,
                                    const std::vector<std::vector<int>>& counts);

  int k() const { return k_; }
  int num_players() const { return static_cast<int>(multisets_.size()); }
  std::span<const Action> multiset(int player) const {
    return multisets_[player];
  }
  const std::vector<std::vector<Action>>& multisets() const {
    return multisets_;
  }

  // Multiplicity of every action in [0, num_actions) for one player.
  std::vector<int> Counts(int player, int num_actions) const;

  friend bool operator==(const KUniformProfile&,
                         const KUniformProfile&) = default;

 private:
  int k_;
  std::vector<std::vector<Action>> multisets_;
};

// x_i(j) = multiplicity of j in player i's multiset, divided by k.
MixedProfile Aggregate(const KUniformProfile& profile, int num_actions);

}  // namespace kuniform

#endif  // KUNIFORM_PROFILE_H_
