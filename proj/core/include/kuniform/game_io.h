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
#ifndef KUNIFORM_GAME_IO_H_
#define KUNIFORM_GAME_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kuniform/game.h"
#include "kuniform/profile.h"

namespace kuniform {

// JSON game files.
//
//   {
//     "players": n,
//     "actions": m,                      // or [m_0, ..., m_{n-1}] (dense only)
//     "form": "dense" | "graphical",
//     "payoffs": [[...m^n values...], ...]          // dense, one per player
//              | [{"deps": [j, ...], "table": [...]}, ...],   // graphical
//     "scale": [lo, hi],                 // optional affine rescale to [0,1]
//     "meta": { ... }                    // optional, free-form
//   }
//
// Players and actions are 0-based. Dense tensors are row-major with player 0
// the slowest axis; a graphical table has the player's own action as its
// slowest axis followed by its dependencies in listed order.
//
// When "actions" lists unequal counts, every player is padded to the largest
// count by repeating its last action; equilibria of the padded game map back
// to equilibria of the original by merging the copies.
//
// SerializeGame writes the canonical form: fixed key order, one line per
// player, shortest round-trip number formatting, no "scale". Parsing a
// canonical file and serializing it again reproduces it byte for byte.
struct GameFile {
  Game game;
  // Compact JSON text of "meta", if present.
  std::optional<std::string> meta;
};

// Throws ParseError; its kind tells malformed documents, range errors and
// dimension errors apart.
GameFile ParseGameFile(std::string_view text);
inline Game ParseGame(std::string_view text) { return ParseGameFile(text).game; }

std::string SerializeGame(const GameFile& file);
inline std::string SerializeGame(const Game& game) {
  return SerializeGame(GameFile{game, std::nullopt});
}

GameFile LoadGameFile(const std::filesystem::path& path);
void SaveTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

// Profile files: either {"strategies": [[p, ...], ...]} or
// {"k": k, "multisets": [[a, ...], ...]}. A k-uniform file is aggregated.
MixedProfile ParseProfile(std::string_view text, int num_actions);
std::string SerializeProfile(const MixedProfile& profile);
std::string SerializeProfile(const KUniformProfile& profile);

}  // namespace kuniform

#endif  // KUNIFORM_GAME_IO_H_
