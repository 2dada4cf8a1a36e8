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
// Acceptance suite. Runs every criterion (or the ones named on the command
// line) and prints one PASS/FAIL line each. Exit status is nonzero when any
// selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kuniform/analysis.h"
#include "kuniform/bounds.h"
#include "kuniform/experiment.h"
#include "kuniform/game_io.h"
#include "kuniform/generators.h"
#include "kuniform/lift.h"
#include "kuniform/multiset.h"
#include "kuniform/oracle.h"
#include "kuniform/search.h"
#include "oracles.h"

namespace kuniform {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 for none
  std::function<Verdict()> run;
};

std::string Format(const char* fmt, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), fmt, args...);
  return buffer;
}

// Regret of a 2-player profile written out as bilinear sums over the pure
// payoff lookups.
double TwoPlayerRegret(const Game& g, const MixedProfile& x) {
  const int m = g.num_actions();
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    const auto own = x.strategy(i);
    const auto other = x.strategy(1 - i);
    std::vector<double> value(m, 0.0);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        const std::vector<int> profile = i == 0 ? std::vector<int>{a, b}
                                                : std::vector<int>{b, a};
        value[a] += other[b] * g.PurePayoff(i, profile);
      }
    }
    double current = 0.0;
    double best = 0.0;
    for (int a = 0; a < m; ++a) {
      current += own[a] * value[a];
      best = std::max(best, value[a]);
    }
    worst = std::max(worst, best - current);
  }
  return worst;
}

// Calls f on every lifted pure profile of a 2-population lift.
template <typename F>
void ForEachLifted(int n, int m, int k, F f) {
  LiftedPureProfile a;
  a.populations.assign(n, std::vector<Action>(k, 0));
  while (true) {
    f(a);
    int p = n * k - 1;
    for (; p >= 0; --p) {
      Action& b = a.populations[p / k][p % k];
      if (++b < m) break;
      b = 0;
    }
    if (p < 0) return;
  }
}

Verdict LiftLipschitz() {
  int games = 0;
  int violations = 0;
  double worst_ratio = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + seed % 2;
    const int m = 2 + (seed / 2) % 2;
    const int k = 2 + (seed / 4) % 2;
    const Game u = testing::RandomGame(seed, n, m);
    const double lambda = LipschitzConstant(LiftedGame(u, k).Materialize());
    ++games;
    worst_ratio = std::max(worst_ratio, lambda * k);
    if (lambda > 1.0 / k + 1e-12) ++violations;
  }
  return {violations == 0,
          Format("%d games, max k*lambda = %.6f, %d violations", games,
                 worst_ratio, violations)};
}

Verdict LiftRoundTrip() {
  std::ostringstream detail;
  int total_violations = 0;
  for (double eps : {0.0, 0.1, 0.5}) {
    int forward = 0;
    int converse = 0;
    int lifted_equilibria = 0;
    int uniform_equilibria = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Game u = testing::RandomGame(500 + seed, 2, 2);
      ForEachLifted(2, 2, 2, [&](const LiftedPureProfile& a) {
        const CorrespondenceVerdict c = VerifyCorrespondence(u, 2, eps, a);
        if (c.lifted_equilibrium) {
          ++lifted_equilibria;
          if (!c.projected_equilibrium) ++forward;
        }
      });
      // Every 2-uniform profile of u, through its ordered representative.
      MultisetCursor first(2, 2);
      do {
        MultisetCursor second(2, 2);
        do {
          const KUniformProfile x(2, {{first.elements().begin(), first.elements().end()},
                                      {second.elements().begin(), second.elements().end()}});
          const CorrespondenceVerdict c = VerifyCorrespondence(u, eps, x);
          if (c.projected_equilibrium) {
            ++uniform_equilibria;
            if (!c.lifted_equilibrium) ++converse;
          }
        } while (second.Next());
      } while (first.Next());
    }
    total_violations += forward + converse;
    detail << Format("eps=%.1f: forward %d/%d, converse %d/%d violations; ", eps,
                     forward, lifted_equilibria, converse, uniform_equilibria);
  }
  return {total_violations == 0, detail.str()};
}

Verdict CountingEquivalence() {
  int cases = 0;
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int m : {2, 3}) {
      const Game g = testing::RandomGame(900 + seed * 2 + m, 2, m);
      for (int k : {1, 2, 3}) {
        for (double eps : {0.0, 0.05, 0.2, 0.5}) {
          SearchConfig c;
          c.k = k;
          c.epsilon = eps;
          ++cases;
          if (CountOrderedEquilibria(g, c).ordered_equilibria !=
              testing::CountOrderedDirect(g, k, eps)) {
            ++mismatches;
          }
        }
      }
    }
  }
  return {mismatches == 0, Format("%d (game, k, eps) cases, %d mismatches", cases, mismatches)};
}

Verdict MatchingPenniesCount() {
  SearchConfig c;
  c.k = 2;
  c.epsilon = 0.5;
  const CountResult r = CountOrderedEquilibria(testing::MatchingPennies(), c);
  const BigCount direct = testing::CountOrderedDirect(testing::MatchingPennies(), 2, 0.5);
  return {r.ordered_equilibria == 12 && r.ordered_total == 16 && direct == 12,
          "count " + r.ordered_equilibria.str() + " of " + r.ordered_total.str() +
              ", brute force " + direct.str()};
}

Verdict ExistenceAtBound() {
  const int k = KGeneral(2, 2, 0.5);
  int found = 0;
  double worst = 0.0;
  std::uint64_t visited = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = testing::RandomGame(1300 + seed, 2, 2);
    SearchConfig c;
    c.k = k;
    c.epsilon = 0.5;
    const SearchResult r = ExhaustiveSearch(g, c);
    visited += r.visited;
    if (r.outcome != SearchOutcome::kFound) continue;
    const double regret = TwoPlayerRegret(g, Aggregate(*r.witness, 2));
    worst = std::max(worst, regret);
    if (regret <= 0.5 + 1e-9) ++found;
  }
  return {k == 45 && found == 20,
          Format("k=%d, %d/20 verified witnesses, max regret %.6f, %llu profiles visited",
                 k, found, worst, static_cast<unsigned long long>(visited))};
}

Verdict DensityAtUnitC() {
  const double threshold = 0.5 - 3.0 * std::sqrt(0.25 / 2000);
  double lowest = 1.0;
  int passing = 0;
  int games = 0;
  for (int m : {2, 4}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Game g = Generate(GeneratorKind::kUniformEquilibrium,
                              {.players = 2, .actions = m}, seed);
      SearchConfig c;
      c.k = KGeneral(2, m, 0.5);
      c.epsilon = 0.5;
      c.max_samples = 2000;
      c.seed = 77 + seed;
      const double f = MeasureSampleDensity(g, c).fraction();
      lowest = std::min(lowest, f);
      ++games;
      if (f >= threshold) ++passing;
    }
  }
  return {passing == games,
          Format("%d/%d games at or above %.4f, lowest fraction %.4f (k=%d and k=%d)",
                 passing, games, threshold, lowest, KGeneral(2, 2, 0.5),
                 KGeneral(2, 4, 0.5))};
}

Verdict Concentration() {
  int consistent = 0;
  int nonvacuous = 0;
  std::string binomial;
  bool binomial_ok = false;
  constexpr int kQueries = 100;
  for (int q = 0; q < kQueries; ++q) {
    ConcentrationQuery query;
    query.trials = 100'000;
    query.seed = 4000 + q;
    ConcentrationResult r;
    if (q == 0) {
      const Game mp = testing::MatchingPennies();
      const LiftedGame v(mp, 100);
      query.profile = MixedProfile::Uniform(200, 2);
      query.delta = 0.1;
      r = EmpiricalConcentration(v, query);
      const double exact = testing::BinomialHalfInterval(100, 40, 60);
      binomial_ok = r.degree == 100 && std::abs(r.bound - 0.26424) < 1e-5 &&
                    std::abs(r.frequency - exact) <= 4.0 * std::sqrt(0.25 / query.trials);
      binomial = Format("binomial case freq %.4f exact %.4f bound %.5f", r.frequency,
                        exact, r.bound);
    } else {
      std::mt19937_64 rng(q);
      const int n = 2 + q % 2;
      const int m = 2 + (q / 2) % 2;
      const int k = 2 + q % 9;
      const Game u = testing::RandomGame(7000 + q, n, m);
      const LiftedGame v(u, k);
      std::exponential_distribution<double> exp1(1.0);
      std::vector<std::vector<double>> s(n * k, std::vector<double>(m));
      for (auto& row : s) {
        double sum = 0.0;
        for (double& p : row) sum += (p = exp1(rng));
        for (double& p : row) p /= sum;
      }
      query.profile = MixedProfile(std::move(s));
      query.player = static_cast<int>(rng() % (n * k));
      query.action = static_cast<Action>(rng() % m);
      query.delta = 0.02 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
      r = EmpiricalConcentration(v, query);
    }
    if (r.bound - r.slack > 0.0) ++nonvacuous;
    if (r.Consistent()) ++consistent;
  }
  return {consistent == kQueries && binomial_ok,
          Format("%d/%d queries consistent (%d nonvacuous); ", consistent, kQueries,
                 nonvacuous) + binomial};
}

bool RelativelyClose(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

Verdict BoundsArithmetic() {
  bool ok = KGeneral(2, 2, 0.5) == 45 && KGraphical(4, 2, 1, 1.0) == 17;
  // Hand computation: 32 (ln 2 + ln 2) = 44.36 and 8 (ln 4 + ln 2) = 16.64.
  ok = ok && std::ceil(32.0 * 2.0 * std::log(2.0)) == 45.0 &&
       std::ceil(8.0 * 3.0 * std::log(2.0)) == 17.0;
  int cases = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 6; ++m) {
      for (double eps : {0.1, 0.5, 1.0}) {
        ok = ok && Log2ExpectedSamples(n, m, 1.0, eps) == 0.0 &&
             std::exp2(Log2ExpectedSamples(n, m, 1.0, eps)) == 1.0;
        for (int k = 1; k <= 50; k += 7) {
          const double expected = k * n * std::log2(m) - 1.0;
          ok = ok && RelativelyClose(
                         EquilibriumCountLowerBound(n, m, 1.0, eps, k).log2_count, expected);
          ++cases;
        }
      }
    }
  }
  ok = ok && std::exp2(EquilibriumCountLowerBound(2, 2, 1.0, 0.5, 2).log2_count) == 8.0;
  return {ok, Format("k values, unit-c sample count and %d count-bound cases", cases)};
}

Verdict Determinism() {
  const std::filesystem::path fixtures = KUNIFORM_FIXTURE_DIR;
  int files = 0;
  int identical = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
    const std::string name = entry.path().filename().string();
    if (name == "bad_range.json" || name.find("profile") != std::string::npos ||
        entry.path().extension() != ".json") {
      continue;
    }
    ++files;
    const std::string text = ReadTextFile(entry.path());
    if (SerializeGame(ParseGameFile(text)) == text) ++identical;
  }
  int specs = 0;
  int repeatable = 0;
  for (const char* text : {
           R"({"generator": {"kind": "matching-pennies"}, "epsilons": [0],
               "k_policy": "minimal", "seeds": [0, 1, 2]})",
           R"({"generator": {"kind": "random-dense", "players": 3, "actions": 2},
               "epsilons": [0.05, 0.25], "k": 2, "seeds": [11, 12, 13, 14], "threads": 2})",
           R"({"generator": {"kind": "uniform-equilibrium", "players": 2, "actions": 3},
               "epsilons": [0.5], "k": 6, "method": "sample", "max_samples": 500,
               "seeds": [5, 6]})"}) {
    const ExperimentSpec spec = ParseExperimentSpec(text);
    ++specs;
    if (RunExperiment(spec).ToCsv(false) == RunExperiment(spec).ToCsv(false)) ++repeatable;
  }
  return {files > 0 && identical == files && repeatable == specs,
          Format("%d/%d fixtures byte-identical, %d/%d specs repeat their CSV", identical,
                 files, repeatable, specs)};
}

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "lift is 1/k-Lipschitz", 30, LiftLipschitz},
      {2, "lift equilibrium round trip", 10, LiftRoundTrip},
      {3, "multiset-weighted count equals direct enumeration", 60, CountingEquivalence},
      {4, "matching pennies count at k=2, eps=0.5", 0, MatchingPenniesCount},
      {5, "exhaustive search finds witnesses at k_general", 10, ExistenceAtBound},
      {6, "sampled equilibrium density at c=1", 60, DensityAtUnitC},
      {7, "empirical concentration respects the bound", 120, Concentration},
      {8, "bounds arithmetic", 0, BoundsArithmetic},
      {9, "round-trip and CSV determinism", 0, Determinism},
  };
  return criteria;
}

}  // namespace
}  // namespace kuniform

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int a = 1; a < argc; ++a) selected.insert(std::atoi(argv[a]));
  int failures = 0;
  for (const auto& c : kuniform::Criteria()) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    kuniform::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0 || seconds < c.time_limit_s;
    const bool pass = v.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s [%s] (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title, v.detail.c_str(), seconds, in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
