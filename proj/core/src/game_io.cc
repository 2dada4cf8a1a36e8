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
#include "kuniform/game_io.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kuniform/errors.h"

namespace kuniform {
namespace {

using Json = nlohmann::ordered_json;
using Kind = ParseError::Kind;

const Json& Require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(Kind::kMalformed, std::string("missing key \"") + key + "\"");
  }
  return doc.at(key);
}

int RequirePositiveInt(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    throw ParseError(Kind::kMalformed, std::string(what) + " must be a positive integer");
  }
  return value.get<int>();
}

std::vector<double> NumberArray(const Json& value, const std::string& what) {
  if (!value.is_array()) {
    throw ParseError(Kind::kMalformed, what + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(value.size());
  for (const Json& v : value) {
    if (!v.is_number()) {
      throw ParseError(Kind::kMalformed, what + " must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

struct Rescale {
  double lo = 0.0;
  double hi = 1.0;
  bool active = false;

  double Apply(double v) const { return active ? (v - lo) / (hi - lo) : v; }
};

void NormalizeRange(std::vector<double>& values, const Rescale& scale,
                    const std::string& what) {
  for (double& v : values) {
    v = scale.Apply(v);
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ParseError(Kind::kRange,
                       what + " contains " + Json(v).dump() +
                           (scale.active ? " after rescaling" : "") +
                           "; payoffs must lie in [0,1] (declare \"scale\")");
    }
  }
}

std::string Dump(double v) { return Json(v).dump(); }

std::string DumpArray(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t q = 0; q < values.size(); ++q) {
    if (q) out += ", ";
    out += Dump(values[q]);
  }
  return out + "]";
}

std::string DumpIntArray(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t q = 0; q < values.size(); ++q) {
    if (q) out += ", ";
    out += std::to_string(values[q]);
  }
  return out + "]";
}

// Pads a dense tensor over action counts `counts` to m = max count by
// mapping each padded action to the player's last real action.
std::vector<double> PadDense(const std::vector<double>& values,
                             const std::vector<int>& counts, int m) {
  const int n = static_cast<int>(counts.size());
  std::vector<std::uint64_t> strides(n, 1);
  for (int p = n - 2; p >= 0; --p) strides[p] = strides[p + 1] * counts[p + 1];
  const std::uint64_t size = SaturatingPow(m, n);
  std::vector<double> padded(size);
  std::vector<int> a(n, 0);
  for (std::uint64_t index = 0; index < size; ++index) {
    std::uint64_t src = 0;
    for (int p = 0; p < n; ++p) src += strides[p] * std::min(a[p], counts[p] - 1);
    padded[index] = values[src];
    for (int p = n - 1; p >= 0; --p) {
      if (++a[p] < m) break;
      a[p] = 0;
    }
  }
  return padded;
}

GameFile FromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError(Kind::kMalformed, "top level must be an object");
  const int n = RequirePositiveInt(Require(doc, "players"), "\"players\"");

  std::vector<int> counts;
  const Json& actions = Require(doc, "actions");
  if (actions.is_array()) {
    if (static_cast<int>(actions.size()) != n) {
      throw ParseError(Kind::kDimension, "\"actions\" lists " +
                                             std::to_string(actions.size()) +
                                             " counts for " + std::to_string(n) +
                                             " players");
    }
    for (const Json& c : actions) counts.push_back(RequirePositiveInt(c, "action count"));
  } else {
    counts.assign(n, RequirePositiveInt(actions, "\"actions\""));
  }
  const int m = *std::max_element(counts.begin(), counts.end());
  const bool unequal = *std::min_element(counts.begin(), counts.end()) != m;

  const Json& form = Require(doc, "form");
  if (!form.is_string() || (form != "dense" && form != "graphical")) {
    throw ParseError(Kind::kMalformed, "\"form\" must be \"dense\" or \"graphical\"");
  }

  Rescale scale;
  if (doc.contains("scale")) {
    const std::vector<double> bounds = NumberArray(doc.at("scale"), "\"scale\"");
    if (bounds.size() != 2 || !(bounds[1] > bounds[0])) {
      throw ParseError(Kind::kMalformed, "\"scale\" must be [lo, hi] with lo < hi");
    }
    scale = Rescale{bounds[0], bounds[1], true};
  }

  const Json& payoffs = Require(doc, "payoffs");
  if (!payoffs.is_array()) throw ParseError(Kind::kMalformed, "\"payoffs\" must be an array");
  if (static_cast<int>(payoffs.size()) != n) {
    throw ParseError(Kind::kDimension, "\"payoffs\" has " +
                                           std::to_string(payoffs.size()) +
                                           " entries for " + std::to_string(n) +
                                           " players");
  }

  std::optional<Game> game;
  if (form == "dense") {
    std::uint64_t expected = 1;
    for (int c : counts) expected = SaturatingMul(expected, c);
    std::vector<std::vector<double>> tensors;
    for (int i = 0; i < n; ++i) {
      const std::string what = "payoff tensor of player " + std::to_string(i);
      std::vector<double> values = NumberArray(payoffs[i], what);
      if (values.size() != expected) {
        throw ParseError(Kind::kDimension, what + " has " +
                                               std::to_string(values.size()) +
                                               " entries, expected " +
                                               std::to_string(expected));
      }
      NormalizeRange(values, scale, what);
      tensors.push_back(unequal ? PadDense(values, counts, m) : std::move(values));
    }
    game = Game::Dense(n, m, std::move(tensors));
  } else {
    if (unequal) {
      throw ParseError(Kind::kUnsupported,
                       "graphical games need equal action counts");
    }
    std::vector<std::vector<int>> deps(n);
    std::vector<std::vector<double>> tables(n);
    for (int i = 0; i < n; ++i) {
      const std::string what = "local table of player " + std::to_string(i);
      const Json& entry = payoffs[i];
      const Json& d = Require(entry, "deps");
      if (!d.is_array()) throw ParseError(Kind::kMalformed, "\"deps\" must be an array");
      std::vector<bool> seen(n, false);
      seen[i] = true;
      for (const Json& j : d) {
        if (!j.is_number_integer()) {
          throw ParseError(Kind::kMalformed, "\"deps\" must contain player indices");
        }
        const int dep = j.get<int>();
        if (dep < 0 || dep >= n || seen[dep]) {
          throw ParseError(Kind::kDimension, "player " + std::to_string(i) +
                                                 " has an invalid dependency " +
                                                 std::to_string(dep));
        }
        seen[dep] = true;
        deps[i].push_back(dep);
      }
      tables[i] = NumberArray(Require(entry, "table"), what);
      const std::uint64_t expected =
          SaturatingPow(m, static_cast<int>(deps[i].size()) + 1);
      if (tables[i].size() != expected) {
        throw ParseError(Kind::kDimension, what + " has " +
                                               std::to_string(tables[i].size()) +
                                               " entries, expected " +
                                               std::to_string(expected));
      }
      NormalizeRange(tables[i], scale, what);
    }
    game = Game::Graphical(n, m, std::move(deps), std::move(tables));
  }

  GameFile file{*std::move(game), std::nullopt};
  if (doc.contains("meta")) file.meta = doc.at("meta").dump();
  return file;
}

}  // namespace

GameFile ParseGameFile(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(Kind::kMalformed, e.what());
  }
  try {
    return FromJson(doc);
  } catch (const Json::exception& e) {
    throw ParseError(Kind::kMalformed, e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(Kind::kDimension, e.what());
  }
}

std::string SerializeGame(const GameFile& file) {
  const Game& game = file.game;
  std::ostringstream out;
  out << "{\n"
      << "  \"players\": " << game.num_players() << ",\n"
      << "  \"actions\": " << game.num_actions() << ",\n"
      << "  \"form\": \"" << (game.is_dense() ? "dense" : "graphical") << "\",\n"
      << "  \"payoffs\": [\n";
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& values = game.table(i).values;
    out << "    ";
    if (game.is_dense()) {
      out << DumpArray(values);
    } else {
      const auto deps = game.declared_dependencies(i);
      out << "{\"deps\": " << DumpIntArray({deps.begin(), deps.end()})
          << ", \"table\": " << DumpArray(values) << "}";
    }
    out << (i + 1 < game.num_players() ? ",\n" : "\n");
  }
  out << "  ]";
  if (file.meta) out << ",\n  \"meta\": " << *file.meta;
  out << "\n}\n";
  return out.str();
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void SaveTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

GameFile LoadGameFile(const std::filesystem::path& path) {
  return ParseGameFile(ReadTextFile(path));
}

MixedProfile ParseProfile(std::string_view text, int num_actions) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
    if (doc.contains("strategies")) {
      std::vector<std::vector<double>> strategies;
      for (const Json& s : doc.at("strategies")) {
        strategies.push_back(NumberArray(s, "strategy"));
      }
      return MixedProfile(std::move(strategies));
    }
    const int k = RequirePositiveInt(Require(doc, "k"), "\"k\"");
    std::vector<std::vector<Action>> multisets;
    for (const Json& s : Require(doc, "multisets")) {
      multisets.push_back(s.get<std::vector<Action>>());
    }
    return Aggregate(KUniformProfile(k, std::move(multisets)), num_actions);
  } catch (const Json::exception& e) {
    throw ParseError(Kind::kMalformed, e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(Kind::kDimension, e.what());
  }
}

std::string SerializeProfile(const MixedProfile& profile) {
  Json doc;
  doc["strategies"] = profile.strategies();
  return doc.dump() + "\n";
}

std::string SerializeProfile(const KUniformProfile& profile) {
  Json doc;
  doc["k"] = profile.k();
  doc["multisets"] = profile.multisets();
  return doc.dump() + "\n";
}

}  // namespace kuniform
