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
// kuniform: command-line front end for k-uniform equilibrium search.
//
// Exit status: 0 on success, 1 on a runtime or row-level error, 2 on a usage
// error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kuniform/analysis.h"
#include "kuniform/bounds.h"
#include "kuniform/errors.h"
#include "kuniform/experiment.h"
#include "kuniform/game_io.h"
#include "kuniform/generators.h"
#include "kuniform/lift.h"
#include "kuniform/multiset.h"
#include "kuniform/oracle.h"
#include "kuniform/search.h"

namespace kuniform {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultEvaluationBudget;
  int threads = 1;
  double epsilon = 0.0;
  int k = 1;
  std::string out;
};

void Emit(const GlobalOptions& global, const std::string& text) {
  if (global.out.empty()) {
    std::cout << text;
  } else {
    SaveTextFile(global.out, text);
  }
}

void EmitJson(const GlobalOptions& global, const Json& doc) {
  Emit(global, doc.dump(2) + "\n");
}

SearchConfig ConfigFrom(const GlobalOptions& global) {
  SearchConfig config;
  config.k = global.k;
  config.epsilon = global.epsilon;
  config.seed = global.seed;
  config.enumeration_budget = global.budget;
  config.threads = global.threads;
  return config;
}

Json ProfileJson(const KUniformProfile& profile, int num_actions) {
  return Json{{"k", profile.k()},
              {"multisets", profile.multisets()},
              {"strategies", Aggregate(profile, num_actions).strategies()}};
}

Json SearchJson(const Game& game, const SearchConfig& config,
                const SearchResult& result) {
  Json doc;
  doc["outcome"] = ToString(result.outcome);
  doc["k"] = config.k;
  doc["epsilon"] = config.epsilon;
  doc["visited"] = result.visited;
  if (result.witness) {
    doc["witness"] = ProfileJson(*result.witness, game.num_actions());
    doc["witness_max_regret"] = result.witness_max_regret;
  } else {
    doc["witness"] = nullptr;
  }
  doc["wall_ms"] = result.wall_ms;
  return doc;
}

// Calls f on every canonical k-uniform profile of the game.
template <typename F>
void ForEachKUniform(int n, int m, int k, F f) {
  std::vector<MultisetCursor> cursors(n, MultisetCursor(m, k));
  while (true) {
    std::vector<std::vector<Action>> multisets;
    for (const auto& c : cursors) multisets.emplace_back(c.elements().begin(), c.elements().end());
    f(KUniformProfile(k, std::move(multisets)));
    int p = n - 1;
    while (p >= 0 && !cursors[p].Next()) --p;
    if (p < 0) return;
  }
}

int RunGen(const GlobalOptions& global, const std::string& kind,
           const GeneratorParams& params) {
  Emit(global, SerializeGame(Generate(kind, params, global.seed)));
  return 0;
}

int RunCheck(const GlobalOptions& global, const std::string& game_path,
             const std::string& profile_path, std::optional<double> c) {
  const Game game = LoadGameFile(game_path).game;
  const MixedProfile x = ParseProfile(ReadTextFile(profile_path), game.num_actions());
  const RegretReport report = Regret(game, x, global.budget);
  Json players = Json::array();
  for (const PlayerRegret& p : report.players) {
    players.push_back({{"payoff", p.payoff},
                       {"best_response", p.best_response},
                       {"best_response_value", p.best_response_value},
                       {"regret", p.regret}});
  }
  Json doc{{"players", players},
           {"max_regret", report.max_regret},
           {"epsilon", global.epsilon},
           {"equilibrium", report.IsEpsilonEquilibrium(global.epsilon)}};
  if (c) doc["c_small"] = IsCSmall(x, game.num_actions(), *c);
  EmitJson(global, doc);
  return 0;
}

int RunSearch(const GlobalOptions& global, const std::string& game_path) {
  const Game game = LoadGameFile(game_path).game;
  const SearchConfig config = ConfigFrom(global);
  EmitJson(global, SearchJson(game, config, ExhaustiveSearch(game, config)));
  return 0;
}

int RunSample(const GlobalOptions& global, const std::string& game_path,
              std::uint64_t samples, bool density) {
  const Game game = LoadGameFile(game_path).game;
  SearchConfig config = ConfigFrom(global);
  config.max_samples = samples;
  Json doc = SearchJson(game, config, SampleSearch(game, config));
  doc["seed"] = global.seed;
  if (density) {
    const SampleDensity d = MeasureSampleDensity(game, config);
    doc["density"] = {{"samples", d.samples},
                      {"successes", d.successes},
                      {"fraction", d.fraction()}};
  }
  EmitJson(global, doc);
  return 0;
}

int RunCount(const GlobalOptions& global, const std::string& game_path, double c) {
  const Game game = LoadGameFile(game_path).game;
  const SearchConfig config = ConfigFrom(global);
  const CountResult result = CountOrderedEquilibria(game, config);
  Json doc{{"k", config.k},
           {"epsilon", config.epsilon},
           {"ordered_equilibria", result.ordered_equilibria.str()},
           {"ordered_total", result.ordered_total.str()},
           {"canonical_visited", result.canonical_visited}};
  if (config.epsilon > 0.0) {
    const CountBound bound = EquilibriumCountLowerBound(
        game.num_players(), game.num_actions(), c, config.epsilon, config.k);
    doc["lower_bound"] = {{"c", c},
                          {"log2_count", bound.log2_count},
                          {"advisory", !bound.guaranteed}};
  }
  doc["wall_ms"] = result.wall_ms;
  EmitJson(global, doc);
  return 0;
}

int RunMinimalK(const GlobalOptions& global, const std::string& game_path, int k_max) {
  const Game game = LoadGameFile(game_path).game;
  const MinimalKResult result = MinimalK(game, k_max, ConfigFrom(global));
  Json doc;
  doc["epsilon"] = global.epsilon;
  doc["k_max"] = k_max;
  doc["k"] = result.k ? Json(*result.k) : Json(nullptr);
  doc["outcome"] = result.k ? "found"
                   : result.last_outcome == SearchOutcome::kBudgetHit ? "budget-hit"
                                                                       : "none-found";
  doc["total_visited"] = result.total_visited;
  if (result.search.witness) {
    doc["witness"] = ProfileJson(*result.search.witness, game.num_actions());
    doc["witness_max_regret"] = result.search.witness_max_regret;
  }
  EmitJson(global, doc);
  return 0;
}

int RunBounds(const GlobalOptions& global, int n, int m, std::optional<int> degree,
              double c, std::optional<double> delta, std::optional<double> lambda,
              std::optional<int> k) {
  const double eps = global.epsilon;
  Json doc{{"players", n}, {"actions", m}, {"epsilon", eps}};
  doc["k_general"] = KGeneral(n, m, eps);
  if (degree) {
    doc["degree"] = *degree;
    doc["k_graphical"] = KGraphical(n, m, *degree, eps);
  }
  const int count_k = k.value_or(KGeneral(n, m, eps));
  const CountBound bound = EquilibriumCountLowerBound(n, m, c, eps, count_k);
  doc["c"] = c;
  doc["count_lower_bound"] = {{"k", count_k},
                              {"log2_count", bound.log2_count},
                              {"advisory", !bound.guaranteed}};
  doc["log2_expected_samples"] = Log2ExpectedSamples(n, m, c, eps);
  if (delta && lambda) {
    const int d = degree.value_or(n - 1);
    try {
      doc["concentration_bound"] = ConcentrationBound(*delta, d, *lambda);
    } catch (const Inapplicable& e) {
      doc["concentration_bound"] = nullptr;
      doc["concentration_note"] = e.what();
    }
  }
  EmitJson(global, doc);
  return 0;
}

int RunLiftCheck(const GlobalOptions& global, const std::string& game_path) {
  const Game game = LoadGameFile(game_path).game;
  const int n = game.num_players();
  const int m = game.num_actions();
  const int k = global.k;
  const LiftedGame lifted(game, k);
  Json doc{{"k", k}, {"epsilon", global.epsilon}};

  try {
    const double lambda = LipschitzConstant(lifted.Materialize(global.budget), global.budget);
    doc["lipschitz"] = {{"measured", lambda},
                        {"bound", 1.0 / k},
                        {"holds", lambda <= 1.0 / k + 1e-12}};
  } catch (const BudgetExceeded& e) {
    doc["lipschitz"] = {{"skipped", e.what()}};
  }

  const std::uint64_t ordered = SaturatingPow(m, n * k);
  if (ordered > global.budget) {
    throw BudgetExceeded("lift has " + std::to_string(ordered) + " pure profiles");
  }
  std::uint64_t lifted_equilibria = 0, forward = 0;
  LiftedPureProfile a;
  a.populations.assign(n, std::vector<Action>(k, 0));
  for (std::uint64_t index = 0; index < ordered; ++index) {
    const CorrespondenceVerdict v =
        VerifyCorrespondence(game, k, global.epsilon, a, global.budget);
    if (v.lifted_equilibrium) {
      ++lifted_equilibria;
      if (!v.projected_equilibrium) ++forward;
    }
    for (int p = n * k - 1; p >= 0; --p) {
      Action& b = a.populations[p / k][p % k];
      if (++b < m) break;
      b = 0;
    }
  }
  std::uint64_t uniform_equilibria = 0, converse = 0;
  Json counterexamples = Json::array();
  ForEachKUniform(n, m, k, [&](const KUniformProfile& x) {
    const CorrespondenceVerdict v = VerifyCorrespondence(game, global.epsilon, x, global.budget);
    if (!v.projected_equilibrium) return;
    ++uniform_equilibria;
    if (v.lifted_equilibrium) return;
    ++converse;
    if (counterexamples.size() < 5) {
      counterexamples.push_back({{"multisets", x.multisets()},
                                 {"regret", v.projected_max_regret},
                                 {"lifted_regret", v.lifted_max_regret}});
    }
  });
  doc["forward"] = {{"lifted_equilibria", lifted_equilibria}, {"violations", forward}};
  doc["converse"] = {{"k_uniform_equilibria", uniform_equilibria},
                     {"violations", converse},
                     {"examples", counterexamples}};
  EmitJson(global, doc);
  return 0;
}

struct ConcentrationArgs {
  std::string game_path;
  std::optional<std::string> profile_path;
  std::optional<int> lift_k;
  int player = 0;
  int action = 0;
  double delta = 0.1;
  std::uint64_t trials = 100'000;
  std::optional<int> degree;
  std::optional<double> lambda;
};

int RunConcentration(const GlobalOptions& global, const ConcentrationArgs& args) {
  const Game game = LoadGameFile(args.game_path).game;
  const int players = game.num_players() * args.lift_k.value_or(1);
  ConcentrationQuery query;
  query.player = args.player;
  query.action = args.action;
  query.profile = args.profile_path
                      ? ParseProfile(ReadTextFile(*args.profile_path), game.num_actions())
                      : MixedProfile::Uniform(players, game.num_actions());
  query.delta = args.delta;
  query.trials = args.trials;
  query.seed = global.seed;
  query.threads = global.threads;
  query.degree = args.degree;
  query.lipschitz = args.lambda;
  const ConcentrationResult r =
      args.lift_k ? EmpiricalConcentration(LiftedGame(game, *args.lift_k), query)
                  : EmpiricalConcentration(game, query);
  EmitJson(global, Json{{"trials", r.trials},
                        {"hits", r.hits},
                        {"frequency", r.frequency},
                        {"reference_payoff", r.reference_payoff},
                        {"degree", r.degree},
                        {"lipschitz", r.lipschitz},
                        {"bound", r.bound},
                        {"slack", r.slack},
                        {"consistent", r.Consistent()}});
  return 0;
}

int RunExperimentCommand(GlobalOptions global, const std::string& spec_path,
                         bool timing, bool threads_given) {
  ExperimentSpec spec = ParseExperimentSpec(ReadTextFile(spec_path));
  if (threads_given) spec.threads = global.threads;
  if (global.out.empty()) global.out = spec.output;
  const ExperimentReport report = RunExperiment(spec);
  Emit(global, report.ToCsv(timing));
  for (const ExperimentRow& row : report.rows) {
    if (row.error) {
      std::cerr << "seed " << row.seed << ", epsilon " << row.epsilon << ": "
                << row.outcome << "\n";
    }
  }
  return report.has_errors() ? 1 : 0;
}

}  // namespace
}  // namespace kuniform

int main(int argc, char** argv) {
  using namespace kuniform;
  CLI::App app{"k-uniform approximate equilibria: search, counting and bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed");
  app.add_option("--budget", global.budget, "evaluation and enumeration budget")
      ->check(CLI::PositiveNumber);
  auto* threads_opt =
      app.add_option("--threads", global.threads, "worker threads (0 = all cores)")
          ->check(CLI::NonNegativeNumber);
  app.add_option("--epsilon", global.epsilon, "approximation tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--k", global.k, "support size k")->check(CLI::PositiveNumber);
  app.add_option("--out", global.out, "write output to this file");

  std::string game_path, profile_path, kind, spec_path;
  std::function<int()> action;

  auto* gen = app.add_subcommand("gen", "generate a game");
  GeneratorParams params;
  gen->add_option("kind", kind, "generator name")->required();
  gen->add_option("--players", params.players);
  gen->add_option("--actions", params.actions);
  gen->add_option("--degree", params.degree);
  gen->callback([&] { action = [&] { return RunGen(global, kind, params); }; });

  auto* check = app.add_subcommand("check", "regret of a profile");
  std::optional<double> c_small;
  check->add_option("game", game_path)->required()->check(CLI::ExistingFile);
  check->add_option("profile", profile_path)->required()->check(CLI::ExistingFile);
  check->add_option("--c-small", c_small, "also test the c-small property");
  check->callback([&] {
    action = [&] { return RunCheck(global, game_path, profile_path, c_small); };
  });

  auto* search = app.add_subcommand("search", "exhaustive k-uniform search");
  search->add_option("game", game_path)->required()->check(CLI::ExistingFile);
  search->callback([&] { action = [&] { return RunSearch(global, game_path); }; });

  auto* sample = app.add_subcommand("sample", "random k-uniform sampling");
  std::uint64_t samples = 1000;
  bool density = false;
  sample->add_option("game", game_path)->required()->check(CLI::ExistingFile);
  sample->add_option("--samples", samples)->check(CLI::PositiveNumber);
  sample->add_flag("--density", density, "also count successes over all samples");
  sample->callback([&] {
    action = [&] { return RunSample(global, game_path, samples, density); };
  });

  auto* count = app.add_subcommand("count", "count ordered k-uniform equilibria");
  double c = 1.0;
  count->add_option("game", game_path)->required()->check(CLI::ExistingFile);
  count->add_option("--c", c, "small-probability constant for the lower bound");
  count->callback([&] { action = [&] { return RunCount(global, game_path, c); }; });

  auto* minimal = app.add_subcommand("minimal-k", "smallest k with an equilibrium");
  int k_max = 8;
  minimal->add_option("game", game_path)->required()->check(CLI::ExistingFile);
  minimal->add_option("--k-max", k_max)->check(CLI::PositiveNumber);
  minimal->callback([&] { action = [&] { return RunMinimalK(global, game_path, k_max); }; });

  auto* bounds = app.add_subcommand("bounds", "support size and counting bounds");
  int n = 0, m = 0;
  std::optional<int> degree, bound_k;
  std::optional<double> delta, lambda;
  bounds->add_option("--players", n)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--actions", m)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--degree", degree);
  bounds->add_option("--c", c);
  bounds->add_option("--delta", delta);
  bounds->add_option("--lambda", lambda);
  bounds->add_option("--count-k", bound_k, "k for the count bound (default k_general)");
  bounds->callback([&] {
    action = [&] { return RunBounds(global, n, m, degree, c, delta, lambda, bound_k); };
  });

  auto* lift = app.add_subcommand("lift-check", "check the population lift on a game");
  lift->add_option("game", game_path)->required()->check(CLI::ExistingFile);
  lift->callback([&] { action = [&] { return RunLiftCheck(global, game_path); }; });

  auto* conc = app.add_subcommand("concentration", "Monte Carlo concentration check");
  ConcentrationArgs cargs;
  conc->add_option("game", cargs.game_path)->required()->check(CLI::ExistingFile);
  conc->add_option("--profile", cargs.profile_path, "profile file (default uniform)");
  conc->add_option("--lift", cargs.lift_k, "evaluate in the lift with this k");
  conc->add_option("--player", cargs.player);
  conc->add_option("--action", cargs.action);
  conc->add_option("--delta", cargs.delta)->check(CLI::NonNegativeNumber);
  conc->add_option("--trials", cargs.trials)->check(CLI::PositiveNumber);
  conc->add_option("--degree", cargs.degree);
  conc->add_option("--lambda", cargs.lambda);
  conc->callback([&] { action = [&] { return RunConcentration(global, cargs); }; });

  auto* experiment = app.add_subcommand("experiment", "run an experiment spec to CSV");
  bool timing = true;
  experiment->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  experiment->add_flag("!--no-timing", timing, "omit the wall_ms column");
  experiment->callback([&] {
    action = [&] {
      return RunExperimentCommand(global, spec_path, timing, threads_opt->count() > 0);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
