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
#include "kuniform/search.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "kuniform/analysis.h"
#include "kuniform/errors.h"
#include "kuniform/evaluator.h"
#include "kuniform/random.h"

namespace kuniform {
namespace {

using Clock = std::chrono::steady_clock;

double MillisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int ResolveThreads(int requested, std::uint64_t work_items) {
  int threads = requested > 0
                    ? requested
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, work_items)));
}

// Runs worker(thread_index) on `threads` threads and joins them.
template <typename Worker>
void RunWorkers(int threads, Worker&& worker) {
  if (threads == 1) {
    worker(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
}

// Canonical enumeration state shared by exhaustive search and counting. The
// profile space is split into chunks, one per multiset of player 0; inside a
// chunk players 1..n-1 run as an odometer with the last player fastest.
class ChunkScanner {
 public:
  ChunkScanner(const Game& game, int k)
      : evaluator_(game), k_(k), ranks_(game.num_players(), 0) {
    for (int i = 0; i < game.num_players(); ++i) {
      cursors_.emplace_back(game.num_actions(), k);
    }
  }

  // Calls visit() on up to `limit` profiles of chunk `chunk`, in order;
  // visit returns true to stop. Returns the local index where it stopped,
  // or the number of profiles visited.
  template <typename Visit>
  std::uint64_t Scan(std::uint64_t chunk, std::uint64_t limit, Visit&& visit) {
    const Game& game = evaluator_.game();
    const int n = game.num_players();
    const int m = game.num_actions();
    cursors_[0].Assign(MultisetUnrank(chunk, m, k_));
    ranks_[0] = chunk;
    evaluator_.SetCounts(0, cursors_[0].counts(), k_);
    for (int p = 1; p < n; ++p) {
      cursors_[p].Reset();
      ranks_[p] = 0;
      evaluator_.SetCounts(p, cursors_[p].counts(), k_);
    }
    for (std::uint64_t local = 0; local < limit; ++local) {
      if (visit(local)) return local;
      int p = n - 1;
      for (; p >= 1; --p) {
        const bool advanced = cursors_[p].Next();
        ranks_[p] = advanced ? ranks_[p] + 1 : 0;
        evaluator_.SetCounts(p, cursors_[p].counts(), k_);
        if (advanced) break;
      }
      if (p < 1) return local + 1;
    }
    return limit;
  }

  DeviationEvaluator& evaluator() { return evaluator_; }
  const std::vector<std::uint64_t>& ranks() const { return ranks_; }

  std::vector<std::vector<int>> Counts() const {
    std::vector<std::vector<int>> counts;
    for (const auto& c : cursors_) {
      counts.emplace_back(c.counts().begin(), c.counts().end());
    }
    return counts;
  }

 private:
  DeviationEvaluator evaluator_;
  int k_;
  std::vector<MultisetCursor> cursors_;
  std::vector<std::uint64_t> ranks_;
};

struct CanonicalSpace {
  std::uint64_t per_player = 0;  // C(m+k-1, k)
  std::uint64_t chunk_size = 0;  // per_player^(n-1)
  std::uint64_t total = 0;       // per_player^n, saturating
};

CanonicalSpace SpaceOf(const Game& game, int k) {
  CanonicalSpace space;
  space.per_player = NumMultisets(game.num_actions(), k);
  space.chunk_size = SaturatingPow(space.per_player, game.num_players() - 1);
  space.total = SaturatingMul(space.chunk_size, space.per_player);
  return space;
}

void FillWitness(const Game& game, const SearchConfig& config,
                 const std::vector<std::vector<int>>& counts,
                 SearchResult& result) {
  result.witness = KUniformProfile::FromCounts(config.k, counts);
  result.witness_max_regret =
      Regret(game, Aggregate(*result.witness, game.num_actions())).max_regret;
}

// Draws sample `index` into per-player multiplicities.
void DrawSample(std::uint64_t seed, std::uint64_t index, int num_actions, int k,
                std::vector<std::vector<int>>& counts) {
  SplitMix64 rng(MixSeed(seed, index));
  std::uniform_int_distribution<int> action(0, num_actions - 1);
  for (auto& c : counts) {
    std::fill(c.begin(), c.end(), 0);
    for (int j = 0; j < k; ++j) ++c[action(rng)];
  }
}

constexpr std::uint64_t kSampleBlock = 64;

}  // namespace

void SearchConfig::Validate() const {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("epsilon must be a finite nonnegative number");
  }
  if (enumeration_budget == 0) throw InvalidArgument("enumeration budget must be positive");
  if (max_samples == 0) throw InvalidArgument("sample budget must be positive");
  if (threads < 0) throw InvalidArgument("thread count must be nonnegative");
}

std::string_view ToString(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound:
      return "found";
    case SearchOutcome::kExhausted:
      return "exhausted";
    case SearchOutcome::kBudgetHit:
      return "budget-hit";
  }
  return "unknown";
}

SearchResult ExhaustiveSearch(const Game& game, const SearchConfig& config) {
  config.Validate();
  const auto start = Clock::now();
  const CanonicalSpace space = SpaceOf(game, config.k);
  const std::uint64_t cap = std::min(space.total, config.enumeration_budget);
  const std::uint64_t num_chunks =
      (cap + space.chunk_size - 1) / space.chunk_size;

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best_chunk{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  std::uint64_t best_local = 0;
  std::vector<std::vector<int>> best_counts;

  const int threads = ResolveThreads(config.threads, num_chunks);
  RunWorkers(threads, [&](int) {
    ChunkScanner scanner(game, config.k);
    while (true) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= num_chunks || chunk > best_chunk.load()) return;
      const std::uint64_t limit =
          std::min(space.chunk_size, cap - chunk * space.chunk_size);
      bool found = false;
      const std::uint64_t local = scanner.Scan(chunk, limit, [&](std::uint64_t) {
        if (scanner.evaluator().IsEpsilonEquilibrium(config.epsilon)) {
          found = true;
          return true;
        }
        return false;
      });
      if (found) {
        std::lock_guard<std::mutex> lock(mu);
        if (chunk < best_chunk.load()) {
          best_chunk.store(chunk);
          best_local = local;
          best_counts = scanner.Counts();
        }
        return;
      }
    }
  });

  SearchResult result;
  if (best_chunk.load() != std::numeric_limits<std::uint64_t>::max()) {
    result.outcome = SearchOutcome::kFound;
    result.visited = best_chunk.load() * space.chunk_size + best_local + 1;
    FillWitness(game, config, best_counts, result);
  } else if (space.total <= config.enumeration_budget) {
    result.outcome = SearchOutcome::kExhausted;
    result.visited = space.total;
  } else {
    result.outcome = SearchOutcome::kBudgetHit;
    result.visited = cap;
  }
  result.wall_ms = MillisecondsSince(start);
  return result;
}

SearchResult SampleSearch(const Game& game, const SearchConfig& config) {
  config.Validate();
  const auto start = Clock::now();
  const int n = game.num_players();
  const int m = game.num_actions();
  const std::uint64_t num_blocks =
      (config.max_samples + kSampleBlock - 1) / kSampleBlock;

  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  std::vector<std::vector<int>> best_counts;

  RunWorkers(ResolveThreads(config.threads, num_blocks), [&](int) {
    DeviationEvaluator evaluator(game);
    std::vector<std::vector<int>> counts(n, std::vector<int>(m));
    while (true) {
      const std::uint64_t block = next_block.fetch_add(1);
      const std::uint64_t first = block * kSampleBlock;
      if (block >= num_blocks || first > best.load()) return;
      const std::uint64_t last =
          std::min(config.max_samples, first + kSampleBlock);
      for (std::uint64_t s = first; s < last; ++s) {
        DrawSample(config.seed, s, m, config.k, counts);
        for (int i = 0; i < n; ++i) evaluator.SetCounts(i, counts[i], config.k);
        if (evaluator.IsEpsilonEquilibrium(config.epsilon)) {
          std::lock_guard<std::mutex> lock(mu);
          if (s < best.load()) {
            best.store(s);
            best_counts = counts;
          }
          break;
        }
      }
    }
  });

  SearchResult result;
  if (best.load() != std::numeric_limits<std::uint64_t>::max()) {
    result.outcome = SearchOutcome::kFound;
    result.visited = best.load() + 1;
    FillWitness(game, config, best_counts, result);
  } else {
    result.outcome = SearchOutcome::kBudgetHit;
    result.visited = config.max_samples;
  }
  result.wall_ms = MillisecondsSince(start);
  return result;
}

SampleDensity MeasureSampleDensity(const Game& game, const SearchConfig& config) {
  config.Validate();
  const int n = game.num_players();
  const int m = game.num_actions();
  const std::uint64_t num_blocks =
      (config.max_samples + kSampleBlock - 1) / kSampleBlock;
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> successes{0};

  RunWorkers(ResolveThreads(config.threads, num_blocks), [&](int) {
    DeviationEvaluator evaluator(game);
    std::vector<std::vector<int>> counts(n, std::vector<int>(m));
    std::uint64_t local = 0;
    while (true) {
      const std::uint64_t block = next_block.fetch_add(1);
      if (block >= num_blocks) break;
      const std::uint64_t first = block * kSampleBlock;
      const std::uint64_t last =
          std::min(config.max_samples, first + kSampleBlock);
      for (std::uint64_t s = first; s < last; ++s) {
        DrawSample(config.seed, s, m, config.k, counts);
        for (int i = 0; i < n; ++i) evaluator.SetCounts(i, counts[i], config.k);
        if (evaluator.IsEpsilonEquilibrium(config.epsilon)) ++local;
      }
    }
    successes.fetch_add(local);
  });
  return SampleDensity{config.max_samples, successes.load()};
}

CountResult CountOrderedEquilibria(const Game& game, const SearchConfig& config) {
  config.Validate();
  const auto start = Clock::now();
  const CanonicalSpace space = SpaceOf(game, config.k);
  if (space.total > config.enumeration_budget) {
    throw BudgetExceeded("counting needs " +
                         (space.total == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("more than 2^64")
                              : std::to_string(space.total)) +
                         " canonical profiles, budget is " +
                         std::to_string(config.enumeration_budget));
  }
  const int m = game.num_actions();

  // Multinomial weight of every multiset, indexed by lexicographic rank.
  std::vector<BigCount> weights;
  weights.reserve(space.per_player);
  {
    MultisetCursor cursor(m, config.k);
    do {
      weights.push_back(Multinomial(cursor.counts()));
    } while (cursor.Next());
  }

  const std::uint64_t num_chunks = space.per_player;
  std::vector<BigCount> per_chunk(num_chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  RunWorkers(ResolveThreads(config.threads, num_chunks), [&](int) {
    ChunkScanner scanner(game, config.k);
    while (true) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= num_chunks) return;
      BigCount sum = 0;
      scanner.Scan(chunk, space.chunk_size, [&](std::uint64_t) {
        if (scanner.evaluator().IsEpsilonEquilibrium(config.epsilon)) {
          BigCount w = 1;
          for (std::uint64_t r : scanner.ranks()) w *= weights[r];
          sum += w;
        }
        return false;
      });
      per_chunk[chunk] = std::move(sum);
    }
  });

  CountResult result;
  for (const BigCount& c : per_chunk) result.ordered_equilibria += c;
  result.ordered_total = boost::multiprecision::pow(
      BigCount(m), static_cast<unsigned>(config.k * game.num_players()));
  result.canonical_visited = space.total;
  result.wall_ms = MillisecondsSince(start);
  return result;
}

MinimalKResult MinimalK(const Game& game, int k_max, const SearchConfig& config) {
  if (k_max < 1) throw InvalidArgument("k_max must be positive");
  MinimalKResult result;
  SearchConfig cfg = config;
  for (int k = 1; k <= k_max; ++k) {
    cfg.k = k;
    result.search = ExhaustiveSearch(game, cfg);
    result.last_outcome = result.search.outcome;
    result.total_visited += result.search.visited;
    if (result.search.outcome == SearchOutcome::kFound) {
      result.k = k;
      return result;
    }
    if (result.search.outcome == SearchOutcome::kBudgetHit) return result;
  }
  return result;
}

bool IsCSmall(const MixedProfile& x, int num_actions, double c) {
  if (!(c > 0.0)) throw InvalidArgument("c must be positive");
  const double cap = c / num_actions + 1e-12;
  for (const auto& s : x.strategies()) {
    for (double p : s) {
      if (p > cap) return false;
    }
  }
  return true;
}

}  // namespace kuniform
