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
#include "kuniform/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>
#include <utility>

#include "json.hpp"
#include "kuniform/analysis.h"
#include "kuniform/bounds.h"
#include "kuniform/errors.h"
#include "kuniform/search.h"

namespace kuniform {
namespace {

using Json = nlohmann::json;
using Kind = ParseError::Kind;

std::string FormatNumber(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

template <typename T>
T Get(const Json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(Kind::kMalformed, std::string("bad value for \"") + key + "\"");
  }
}

ExperimentRow RunRow(const ExperimentSpec& spec, std::uint64_t seed,
                     double epsilon, int inner_threads) {
  ExperimentRow row;
  row.seed = seed;
  row.epsilon = epsilon;
  row.players = spec.params.players;
  row.actions = spec.params.actions;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Game game = Generate(spec.generator, spec.params, seed);
    row.players = game.num_players();
    row.actions = game.num_actions();
    row.degree = Dependencies(game).EffectiveDegree();
    if (epsilon > 0.0) {
      row.k_bound = KGraphical(game.num_players(), game.num_actions(),
                               *row.degree, epsilon);
    }

    SearchConfig config;
    config.epsilon = epsilon;
    config.seed = seed;
    config.max_samples = spec.max_samples;
    config.enumeration_budget = spec.enumeration_budget;
    config.threads = inner_threads;

    SearchResult result;
    switch (spec.k_policy) {
      case KPolicy::kFixed:
        row.k = spec.k;
        break;
      case KPolicy::kFromBounds:
        if (!row.k_bound) throw InvalidArgument("k from bounds needs epsilon > 0");
        row.k = row.k_bound;
        break;
      case KPolicy::kMinimal: {
        const MinimalKResult minimal = MinimalK(game, spec.k_max, config);
        row.k = minimal.k;
        result = minimal.search;
        row.visited = minimal.total_visited;
        row.outcome = minimal.k ? "found"
                      : minimal.last_outcome == SearchOutcome::kBudgetHit
                          ? "budget-hit"
                          : "none-found";
        break;
      }
    }
    if (spec.k_policy != KPolicy::kMinimal) {
      config.k = *row.k;
      result = spec.method == SearchMethod::kExhaustive
                   ? ExhaustiveSearch(game, config)
                   : SampleSearch(game, config);
      row.outcome = std::string(ToString(result.outcome));
      row.visited = result.visited;
    }
    if (result.witness) row.witness_max_regret = result.witness_max_regret;

    if (spec.count && row.k) {
      config.k = *row.k;
      const std::uint64_t canonical = SaturatingPow(
          NumMultisets(game.num_actions(), *row.k), game.num_players());
      if (canonical <= spec.enumeration_budget) {
        row.ordered_count =
            CountOrderedEquilibria(game, config).ordered_equilibria.str();
      }
    }
  } catch (const Error& e) {
    row.error = true;
    row.outcome = std::string("error: ") + e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

}  // namespace

ExperimentSpec ParseExperimentSpec(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(Kind::kMalformed, e.what());
  }
  if (!doc.is_object()) throw ParseError(Kind::kMalformed, "spec must be an object");
  for (const char* key : {"generator", "epsilons", "seeds"}) {
    if (!doc.contains(key)) {
      throw ParseError(Kind::kMalformed, std::string("missing key \"") + key + "\"");
    }
  }

  ExperimentSpec spec;
  const Json& generator = doc.at("generator");
  const std::string kind = Get<std::string>(generator, "kind", "");
  const auto parsed = ParseGeneratorKind(kind);
  if (!parsed) throw ParseError(Kind::kMalformed, "unknown generator \"" + kind + "\"");
  spec.generator = *parsed;
  spec.params.players = Get<int>(generator, "players", spec.params.players);
  spec.params.actions = Get<int>(generator, "actions", spec.params.actions);
  spec.params.degree = Get<int>(generator, "degree", spec.params.degree);

  spec.epsilons = Get<std::vector<double>>(doc, "epsilons", {});
  spec.seeds = Get<std::vector<std::uint64_t>>(doc, "seeds", {});

  const std::string policy = Get<std::string>(doc, "k_policy", "fixed");
  if (policy == "fixed") {
    spec.k_policy = KPolicy::kFixed;
  } else if (policy == "from-bounds") {
    spec.k_policy = KPolicy::kFromBounds;
  } else if (policy == "minimal") {
    spec.k_policy = KPolicy::kMinimal;
  } else {
    throw ParseError(Kind::kMalformed, "unknown k_policy \"" + policy + "\"");
  }
  spec.k = Get<int>(doc, "k", spec.k);
  spec.k_max = Get<int>(doc, "k_max", spec.k_max);

  const std::string method = Get<std::string>(doc, "method", "exhaustive");
  if (method == "exhaustive") {
    spec.method = SearchMethod::kExhaustive;
  } else if (method == "sample") {
    spec.method = SearchMethod::kSample;
  } else {
    throw ParseError(Kind::kMalformed, "unknown method \"" + method + "\"");
  }
  spec.max_samples = Get<std::uint64_t>(doc, "max_samples", spec.max_samples);
  spec.count = Get<bool>(doc, "count", spec.count);
  spec.enumeration_budget =
      Get<std::uint64_t>(doc, "enumeration_budget", spec.enumeration_budget);
  spec.threads = Get<int>(doc, "threads", spec.threads);
  spec.output = Get<std::string>(doc, "output", "");
  return spec;
}

bool ExperimentReport::has_errors() const {
  for (const auto& row : rows) {
    if (row.error) return true;
  }
  return false;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string ExperimentReport::ToCsv(bool include_timing) const {
  std::string out =
      "seed,n,m,d,epsilon,k,k_bound,outcome,visited,witness_max_regret,"
      "ordered_count";
  out += include_timing ? ",wall_ms\r\n" : "\r\n";
  auto opt_int = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& row : rows) {
    out += std::to_string(row.seed) + ',' + std::to_string(row.players) + ',' +
           std::to_string(row.actions) + ',' + opt_int(row.degree) + ',' +
           FormatNumber(row.epsilon) + ',' + opt_int(row.k) + ',' +
           opt_int(row.k_bound) + ',' + CsvEscape(row.outcome) + ',' +
           std::to_string(row.visited) + ',' +
           (row.witness_max_regret ? FormatNumber(*row.witness_max_regret) : "") +
           ',' + row.ordered_count.value_or("");
    if (include_timing) out += ',' + FormatNumber(row.wall_ms);
    out += "\r\n";
  }
  return out;
}

ExperimentReport RunExperiment(const ExperimentSpec& spec) {
  std::vector<std::pair<std::uint64_t, double>> jobs;
  for (std::uint64_t seed : spec.seeds) {
    for (double epsilon : spec.epsilons) jobs.emplace_back(seed, epsilon);
  }
  ExperimentReport report;
  report.rows.resize(jobs.size());
  const int threads = std::max(1, spec.threads);
  if (threads == 1 || jobs.size() <= 1) {
    for (std::size_t q = 0; q < jobs.size(); ++q) {
      report.rows[q] = RunRow(spec, jobs[q].first, jobs[q].second, threads);
    }
    return report;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    const int workers = static_cast<int>(std::min<std::size_t>(threads, jobs.size()));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t q = next.fetch_add(1); q < jobs.size(); q = next.fetch_add(1)) {
          report.rows[q] = RunRow(spec, jobs[q].first, jobs[q].second, 1);
        }
      });
    }
  }
  return report;
}

}  // namespace kuniform
