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
#include "kuniform/generators.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "kuniform/analysis.h"
#include "kuniform/errors.h"
#include "kuniform/profile.h"
#include "kuniform/random.h"

namespace kuniform {
namespace {

constexpr std::pair<GeneratorKind, std::string_view> kNames[] = {
    {GeneratorKind::kRandomDense, "random-dense"},
    {GeneratorKind::kMatchingPennies, "matching-pennies"},
    {GeneratorKind::kCoordination, "coordination"},
    {GeneratorKind::kZeroSumRandom, "zero-sum-random"},
    {GeneratorKind::kGraphicalRing, "graphical-ring"},
    {GeneratorKind::kGraphicalRandom, "graphical-random"},
    {GeneratorKind::kUniformEquilibrium, "uniform-equilibrium"},
};

void CheckSize(const GeneratorParams& params) {
  if (params.players < 1 || params.actions < 1) {
    throw InvalidArgument("generators need players >= 1 and actions >= 1");
  }
}

void CheckDegree(const GeneratorParams& params) {
  if (params.degree < 0 || params.degree > params.players - 1) {
    throw InvalidArgument("degree must lie in [0, players - 1], got " +
                          std::to_string(params.degree));
  }
}

std::vector<double> RandomValues(std::uint64_t count, SplitMix64& rng) {
  std::vector<double> values(count);
  for (double& v : values) v = rng.NextDouble();
  return values;
}

Game RandomDense(const GeneratorParams& params, SplitMix64& rng) {
  CheckSize(params);
  const std::uint64_t size = SaturatingPow(params.actions, params.players);
  std::vector<std::vector<double>> payoffs;
  for (int i = 0; i < params.players; ++i) payoffs.push_back(RandomValues(size, rng));
  return Game::Dense(params.players, params.actions, std::move(payoffs));
}

Game Graphical(const GeneratorParams& params,
               std::vector<std::vector<int>> deps, SplitMix64& rng) {
  std::vector<std::vector<double>> tables;
  for (const auto& d : deps) {
    tables.push_back(RandomValues(
        SaturatingPow(params.actions, static_cast<int>(d.size()) + 1), rng));
  }
  return Game::Graphical(params.players, params.actions, std::move(deps),
                         std::move(tables));
}

Game UniformEquilibrium(const GeneratorParams& params, SplitMix64& rng) {
  const Game raw = RandomDense(params, rng);
  const int n = params.players;
  const int m = params.actions;
  const MixedProfile uniform = MixedProfile::Uniform(n, m);
  std::vector<std::vector<double>> payoffs;
  for (int i = 0; i < n; ++i) {
    const std::vector<double> mean = DeviationPayoffs(raw, i, uniform);
    std::vector<double> values = raw.table(i).values;
    // Player i's action is axis i; its stride in the dense tensor is m^(n-1-i).
    const std::uint64_t stride = SaturatingPow(m, n - 1 - i);
    for (std::uint64_t index = 0; index < values.size(); ++index) {
      const int own = static_cast<int>((index / stride) % m);
      values[index] = std::clamp((values[index] - mean[own] + 1.0) / 2.0, 0.0, 1.0);
    }
    payoffs.push_back(std::move(values));
  }
  return Game::Dense(n, m, std::move(payoffs));
}

}  // namespace

std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name) {
  for (const auto& [kind, text] : kNames) {
    if (text == name) return kind;
  }
  return std::nullopt;
}

std::string_view ToString(GeneratorKind kind) {
  for (const auto& [k, text] : kNames) {
    if (k == kind) return text;
  }
  return "unknown";
}

const std::vector<GeneratorKind>& AllGeneratorKinds() {
  static const std::vector<GeneratorKind> kinds = [] {
    std::vector<GeneratorKind> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

Game Generate(GeneratorKind kind, const GeneratorParams& params,
              std::uint64_t seed) {
  SplitMix64 rng(MixSeed(seed, static_cast<std::uint64_t>(kind)));
  switch (kind) {
    case GeneratorKind::kRandomDense:
      return RandomDense(params, rng);

    case GeneratorKind::kMatchingPennies:
      return Game::Dense(2, 2, {{1.0, 0.0, 0.0, 1.0}, {0.0, 1.0, 1.0, 0.0}});

    case GeneratorKind::kCoordination: {
      CheckSize(params);
      const int n = params.players;
      const int m = params.actions;
      const std::uint64_t size = SaturatingPow(m, n);
      std::vector<double> values(size, 0.0);
      for (int a = 0; a < m; ++a) {
        // Index of the profile where everyone plays a.
        std::uint64_t index = 0;
        for (int p = 0; p < n; ++p) index = index * m + a;
        values[index] = 1.0;
      }
      return Game::Dense(n, m, std::vector<std::vector<double>>(n, values));
    }

    case GeneratorKind::kZeroSumRandom: {
      if (params.players != 2) {
        throw InvalidArgument("zero-sum-random needs exactly 2 players");
      }
      CheckSize(params);
      std::vector<double> first = RandomValues(
          static_cast<std::uint64_t>(params.actions) * params.actions, rng);
      std::vector<double> second(first.size());
      std::transform(first.begin(), first.end(), second.begin(),
                     [](double v) { return 1.0 - v; });
      return Game::Dense(2, params.actions, {std::move(first), std::move(second)});
    }

    case GeneratorKind::kGraphicalRing: {
      CheckSize(params);
      CheckDegree(params);
      const int n = params.players;
      std::vector<std::vector<int>> deps(n);
      for (int i = 0; i < n; ++i) {
        for (int step = 1; static_cast<int>(deps[i].size()) < params.degree; ++step) {
          for (int j : {(i + step) % n, ((i - step) % n + n) % n}) {
            if (static_cast<int>(deps[i].size()) < params.degree && j != i &&
                std::find(deps[i].begin(), deps[i].end(), j) == deps[i].end()) {
              deps[i].push_back(j);
            }
          }
        }
      }
      return Graphical(params, std::move(deps), rng);
    }

    case GeneratorKind::kGraphicalRandom: {
      CheckSize(params);
      CheckDegree(params);
      const int n = params.players;
      std::vector<std::vector<int>> deps(n);
      for (int i = 0; i < n; ++i) {
        std::vector<int> others;
        for (int j = 0; j < n; ++j) {
          if (j != i) others.push_back(j);
        }
        // Partial Fisher-Yates.
        for (int q = 0; q < params.degree; ++q) {
          const auto pick = q + static_cast<int>(rng() % (others.size() - q));
          std::swap(others[q], others[pick]);
        }
        deps[i].assign(others.begin(), others.begin() + params.degree);
        std::sort(deps[i].begin(), deps[i].end());
      }
      return Graphical(params, std::move(deps), rng);
    }

    case GeneratorKind::kUniformEquilibrium:
      return UniformEquilibrium(params, rng);
  }
  throw InvalidArgument("unknown generator");
}

Game Generate(std::string_view kind, const GeneratorParams& params,
              std::uint64_t seed) {
  const auto parsed = ParseGeneratorKind(kind);
  if (!parsed) {
    throw InvalidArgument("unknown generator \"" + std::string(kind) + "\"");
  }
  return Generate(*parsed, params, seed);
}

}  // namespace kuniform
