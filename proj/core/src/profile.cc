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
#include "kuniform/profile.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "kuniform/errors.h"

namespace kuniform {

MixedProfile::MixedProfile(std::vector<std::vector<double>> strategies)
    : strategies_(std::move(strategies)) {
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    double sum = 0.0;
    for (double p : strategies_[i]) {
      if (!std::isfinite(p) || p < 0.0) {
        throw InvalidArgument("strategy of player " + std::to_string(i) +
                              " has a negative or non-finite entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kTolerance) {
      throw InvalidArgument("strategy of player " + std::to_string(i) +
                            " sums to " + std::to_string(sum));
    }
  }
}

MixedProfile MixedProfile::Uniform(int num_players, int num_actions) {
  return MixedProfile(std::vector<std::vector<double>>(
      num_players, std::vector<double>(num_actions, 1.0 / num_actions)));
}

MixedProfile MixedProfile::Pure(std::span<const Action> profile,
                                int num_actions) {
  std::vector<std::vector<double>> strategies;
  strategies.reserve(profile.size());
  for (Action a : profile) {
    if (a < 0 || a >= num_actions) throw InvalidArgument("action out of range");
    std::vector<double> s(num_actions, 0.0);
    s[a] = 1.0;
    strategies.push_back(std::move(s));
  }
  return MixedProfile(std::move(strategies));
}

void MixedProfile::CheckShape(int num_players, int num_actions) const {
  if (static_cast<int>(strategies_.size()) != num_players) {
    throw InvalidArgument("profile has " + std::to_string(strategies_.size()) +
                          " strategies for a " + std::to_string(num_players) +
                          "-player game");
  }
  for (const auto& s : strategies_) {
    if (static_cast<int>(s.size()) != num_actions) {
      throw InvalidArgument("strategy length " + std::to_string(s.size()) +
                            " does not match " + std::to_string(num_actions) +
                            " actions");
    }
  }
}

KUniformProfile::KUniformProfile(int k,
                                 std::vector<std::vector<Action>> multisets)
    : k_(k), multisets_(std::move(multisets)) {
  if (k_ < 1) throw InvalidArgument("k must be positive");
  for (auto& m : multisets_) {
    if (static_cast<int>(m.size()) != k_) {
      throw InvalidArgument("multiset of size " + std::to_string(m.size()) +
                            " in a " + std::to_string(k_) + "-uniform profile");
    }
    for (Action a : m) {
      if (a < 0) throw InvalidArgument("negative action in multiset");
    }
    std::sort(m.begin(), m.end());
  }
}

KUniformProfile KUniformProfile::FromCounts(
    int k, const std::vector<std::vector<int>>& counts) {
  std::vector<std::vector<Action>> multisets(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t a = 0; a < counts[i].size(); ++a) {
      multisets[i].insert(multisets[i].end(), counts[i][a],
                          static_cast<Action>(a));
    }
  }
  return KUniformProfile(k, std::move(multisets));
}

std::vector<int> KUniformProfile::Counts(int player, int num_actions) const {
  std::vector<int> counts(num_actions, 0);
  for (Action a : multisets_[player]) {
    if (a >= num_actions) throw InvalidArgument("action out of range");
    ++counts[a];
  }
  return counts;
}

MixedProfile Aggregate(const KUniformProfile& profile, int num_actions) {
  std::vector<std::vector<double>> strategies;
  strategies.reserve(profile.num_players());
  for (int i = 0; i < profile.num_players(); ++i) {
    const std::vector<int> counts = profile.Counts(i, num_actions);
    std::vector<double> s(num_actions);
    for (int a = 0; a < num_actions; ++a) {
      s[a] = static_cast<double>(counts[a]) / profile.k();
    }
    strategies.push_back(std::move(s));
  }
  return MixedProfile(std::move(strategies));
}

}  // namespace kuniform
