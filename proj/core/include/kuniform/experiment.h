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
#ifndef KUNIFORM_EXPERIMENT_H_
#define KUNIFORM_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kuniform/generators.h"

namespace kuniform {

enum class KPolicy {
  kFixed,       // use ExperimentSpec::k
  kFromBounds,  // ceil((8/eps^2) d (ln n + ln m)) with the measured degree d
  kMinimal,     // smallest k <= k_max with an eps-equilibrium
};

enum class SearchMethod { kExhaustive, kSample };

// JSON form:
//   {
//     "generator": {"kind": "random-dense", "players": 2, "actions": 2,
//                   "degree": 1},
//     "epsilons": [0.5],
//     "k_policy": "fixed" | "from-bounds" | "minimal",
//     "k": 2, "k_max": 8,
//     "method": "exhaustive" | "sample", "max_samples": 1000,
//     "count": true,
//     "seeds": [1, 2, 3],
//     "enumeration_budget": 10000000,
//     "threads": 1,
//     "output": "report.csv"
//   }
// "generator.kind", "epsilons" and "seeds" are required.
struct ExperimentSpec {
  GeneratorKind generator = GeneratorKind::kRandomDense;
  GeneratorParams params;
  std::vector<double> epsilons;
  KPolicy k_policy = KPolicy::kFixed;
  int k = 1;
  int k_max = 8;
  SearchMethod method = SearchMethod::kExhaustive;
  std::uint64_t max_samples = 1000;
  bool count = true;
  std::vector<std::uint64_t> seeds;
  std::uint64_t enumeration_budget = 10'000'000;
  int threads = 1;
  std::string output;
};

// Throws ParseError on malformed specs or unknown generators.
ExperimentSpec ParseExperimentSpec(std::string_view text);

struct ExperimentRow {
  std::uint64_t seed = 0;
  int players = 0;
  int actions = 0;
  std::optional<int> degree;
  double epsilon = 0.0;
  std::optional<int> k;
  std::optional<int> k_bound;
  // found | exhausted | budget-hit | none-found | error: <message>
  std::string outcome;
  std::uint64_t visited = 0;
  std::optional<double> witness_max_regret;
  // Decimal exact count, when enabled and within the budget.
  std::optional<std::string> ordered_count;
  double wall_ms = 0.0;
  bool error = false;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;

  bool has_errors() const;
  // RFC 4180 CSV with a header row; numbers use 12 significant digits.
  // Without timing the wall_ms column is dropped, which makes the output
  // reproducible run to run.
  std::string ToCsv(bool include_timing = true) const;
};

// One row per (seed, epsilon), seeds outermost. Module errors are recorded
// in the row and do not abort the batch. Rows may run on several threads but
// come back in spec order.
ExperimentReport RunExperiment(const ExperimentSpec& spec);

// Quotes a CSV field when it contains a comma, quote or line break.
std::string CsvEscape(std::string_view field);

}  // namespace kuniform

#endif  // KUNIFORM_EXPERIMENT_H_
