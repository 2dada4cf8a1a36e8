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
#ifndef KUNIFORM_LIFT_H_
#define KUNIFORM_LIFT_H_

#include <cstdint>
#include <vector>

#include "kuniform/analysis.h"
#include "kuniform/game.h"
#include "kuniform/profile.h"

namespace kuniform {

// Member `member` of population `population`.
struct LiftedPlayer {
  int population = 0;
  int member = 0;
};

// One ordered sequence of k actions per population.
struct LiftedPureProfile {
  std::vector<std::vector<Action>> populations;
};

// The population game v(u, k): every base player i becomes k players
// i(0..k-1), each playing u_i against the empirical mixtures of the other
// populations. The lift is never stored; payoffs are computed from the base
// game's multilinear extension. Holds a reference to `base`, which must
// outlive it.
class LiftedGame {
 public:
  LiftedGame(const Game& base, int k);

  const Game& base() const { return *base_; }
  int k() const { return k_; }
  int num_populations() const { return base_->num_players(); }
  int num_players() const { return base_->num_players() * k_; }
  int num_actions() const { return base_->num_actions(); }

  // Flat index population * k + member, used for lifted mixed profiles and
  // the materialized game.
  int Index(LiftedPlayer who) const { return who.population * k_ + who.member; }
  LiftedPlayer PlayerAt(int index) const { return {index / k_, index % k_}; }

  // Throws InvalidArgument unless the profile has n populations of k actions.
  void CheckProfile(const LiftedPureProfile& a) const;

  // v_{i0(j0)}(a) = u_{i0}(a_{i0(j0)}, aggregates of the other populations).
  double Payoff(LiftedPlayer who, const LiftedPureProfile& a,
                std::uint64_t budget = kDefaultEvaluationBudget) const;

  // Regret of every lifted player at a pure profile, indexed by Index().
  // A deviation of i(j) only moves population i's aggregate, which i(j)'s
  // own payoff does not read, so each population needs a single deviation
  // vector u_i(., x_{-i}).
  RegretReport Regret(const LiftedPureProfile& a,
                      std::uint64_t budget = kDefaultEvaluationBudget) const;

  // Dense nk-player game with the same payoffs. Only for micro instances:
  // throws BudgetExceeded when nk * m^(nk) exceeds the budget.
  Game Materialize(std::uint64_t budget = kDefaultEvaluationBudget) const;

 private:
  const Game* base_;
  int k_;
};

// Each population's multiset of actions, in canonical order.
KUniformProfile ProjectProfile(const LiftedPureProfile& a);

// An ordered representative of a k-uniform profile: each population plays
// its sorted multiset.
LiftedPureProfile OrderedRepresentative(const KUniformProfile& profile);

// Every member of population i plays x_i. The result is a mixed profile of
// the nk-player lifted game, indexed by LiftedGame::Index.
MixedProfile LiftMixedProfile(const MixedProfile& x, int k);

// Members' mixtures averaged within each population; the exact reference
// point for the lifted payoff's expectation under independent play.
MixedProfile PopulationMeans(const MixedProfile& lifted, int num_populations,
                             int k);

struct CorrespondenceVerdict {
  bool lifted_equilibrium = false;     // a is a pure eps-equilibrium of v
  bool projected_equilibrium = false;  // its projection is one of u
  double lifted_max_regret = 0.0;
  double projected_max_regret = 0.0;
};

CorrespondenceVerdict VerifyCorrespondence(
    const Game& base, int k, double epsilon, const LiftedPureProfile& a,
    std::uint64_t budget = kDefaultEvaluationBudget);

// Converse direction, starting from a k-uniform profile of the base game.
CorrespondenceVerdict VerifyCorrespondence(
    const Game& base, double epsilon, const KUniformProfile& profile,
    std::uint64_t budget = kDefaultEvaluationBudget);

}  // namespace kuniform

#endif  // KUNIFORM_LIFT_H_
