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
#ifndef KUNIFORM_GENERATORS_H_
#define KUNIFORM_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kuniform/game.h"

namespace kuniform {

enum class GeneratorKind {
  kRandomDense,          // i.i.d. U[0,1] payoffs
  kMatchingPennies,      // fixed 2x2; player 0 wins on a match
  kCoordination,         // 1 to everyone when all actions agree, else 0
  kZeroSumRandom,        // 2 players, u_1 ~ U[0,1], u_2 = 1 - u_1
  kGraphicalRing,        // ring neighbourhoods +1, -1, +2, -2, ...
  kGraphicalRandom,      // d distinct random neighbours per player
  kUniformEquilibrium,   // random dense game where uniform play has 0 regret
};

struct GeneratorParams {
  int players = 2;
  int actions = 2;
  // Neighbourhood size for the graphical kinds.
  int degree = 1;
};

std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name);
std::string_view ToString(GeneratorKind kind);
const std::vector<GeneratorKind>& AllGeneratorKinds();

// Deterministic per (kind, params, seed). matching-pennies ignores params;
// coordination uses players and actions; zero-sum-random requires 2 players.
//
// uniform-equilibrium draws a random dense game and replaces every payoff
// with (u_i(a) - ubar_i(a_i) + 1) / 2, where ubar_i(b) is the payoff of b
// against uniform opponents. Uniform play then has zero regret and the
// profile is 1-small. The map is a positive affine change of each player's
// payoffs with factor 1/2: an eps-equilibrium of the original game is an
// eps/2-equilibrium of the generated one.
Game Generate(GeneratorKind kind, const GeneratorParams& params,
              std::uint64_t seed);

// Throws InvalidArgument on unknown names.
Game Generate(std::string_view kind, const GeneratorParams& params,
              std::uint64_t seed);

}  // namespace kuniform

#endif  // KUNIFORM_GENERATORS_H_
