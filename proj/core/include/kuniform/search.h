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
#ifndef KUNIFORM_SEARCH_H_
#define KUNIFORM_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "kuniform/game.h"
#include "kuniform/multiset.h"
#include "kuniform/profile.h"

namespace kuniform {

struct SearchConfig {
  int k = 1;
  double epsilon = 0.0;
  std::uint64_t max_samples = 1000;
  std::uint64_t seed = 0;
  // Maximum number of profiles examined (canonical multiset profiles for
  // exhaustive search and counting).
  std::uint64_t enumeration_budget = 100'000'000;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  int threads = 1;

  // Throws InvalidArgument on k < 1, negative epsilon or zero budgets.
  void Validate() const;
};

enum class SearchOutcome { kFound, kExhausted, kBudgetHit };

std::string_view ToString(SearchOutcome outcome);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::optional<KUniformProfile> witness;
  // Max regret of the witness, rechecked with the direct evaluator.
  double witness_max_regret = 0.0;
  // Profiles examined, counted as a sequential scan would: for a found
  // witness this is its 1-based position in enumeration (or sample) order.
  std::uint64_t visited = 0;
  double wall_ms = 0.0;
};

// Oblivious exhaustive search over k-uniform profiles. Player 0's multiset is
// the outermost loop; each player's multisets run in lexicographic order.
// Returns the first profile with max regret <= eps + kTolerance in that
// order, independent of the thread count.
SearchResult ExhaustiveSearch(const Game& game, const SearchConfig& config);

// Draws ordered k-uniform profiles (k i.i.d. uniform actions per player)
// until one is an eps-equilibrium or max_samples is reached. Sample s uses a
// generator derived from (seed, s), so the first success is reproducible for
// any thread count.
SearchResult SampleSearch(const Game& game, const SearchConfig& config);

struct SampleDensity {
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double fraction() const {
    return samples == 0 ? 0.0 : static_cast<double>(successes) / samples;
  }
};

// Draws max_samples profiles exactly as SampleSearch does, without stopping,
// and counts the eps-equilibria.
SampleDensity MeasureSampleDensity(const Game& game, const SearchConfig& config);

struct CountResult {
  // Ordered k-uniform eps-equilibria among the m^(kn) ordered profiles.
  BigCount ordered_equilibria = 0;
  BigCount ordered_total = 0;
  std::uint64_t canonical_visited = 0;
  double wall_ms = 0.0;
};

// Enumerates canonical multiset profiles once each and weights every
// equilibrium by the product of its multinomial coefficients k!/prod c_j!.
// Throws BudgetExceeded when C(m+k-1,k)^n exceeds the enumeration budget.
CountResult CountOrderedEquilibria(const Game& game, const SearchConfig& config);

struct MinimalKResult {
  std::optional<int> k;
  SearchOutcome last_outcome = SearchOutcome::kExhausted;
  // Search result at the returned k, or at the last k tried.
  SearchResult search;
  // Profiles examined over all k tried.
  std::uint64_t total_visited = 0;
};

// Exhaustive search at k = 1, 2, ..., k_max (config.k is ignored). Stops with
// last_outcome == kBudgetHit if some k cannot be decided within the budget.
MinimalKResult MinimalK(const Game& game, int k_max, const SearchConfig& config);

// True iff every probability is at most c/m (+1e-12).
bool IsCSmall(const MixedProfile& x, int num_actions, double c);

}  // namespace kuniform

#endif  // KUNIFORM_SEARCH_H_
