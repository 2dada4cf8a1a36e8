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
#include "kuniform/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "kuniform/errors.h"

namespace kuniform {
namespace {

void CheckCommon(int num_players, int num_actions, double epsilon) {
  if (num_players < 1 || num_actions < 1) {
    throw InvalidArgument("bounds need n >= 1 and m >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw InvalidArgument("epsilon must be positive, got " +
                          std::to_string(epsilon));
  }
}

}  // namespace

int KGraphical(int num_players, int num_actions, int degree, double epsilon) {
  CheckCommon(num_players, num_actions, epsilon);
  if (degree < 0) throw InvalidArgument("degree must be nonnegative");
  const double raw = 8.0 / (epsilon * epsilon) * degree *
                     (std::log(static_cast<double>(num_players)) +
                      std::log(static_cast<double>(num_actions)));
  return std::max(1, static_cast<int>(std::ceil(raw)));
}

int KGeneral(int num_players, int num_actions, double epsilon) {
  return KGraphical(num_players, num_actions, num_players - 1, epsilon);
}

double SmallProbabilityExponent(int num_players, double c, double epsilon) {
  if (num_players < 1) throw InvalidArgument("n must be positive");
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (!(c >= 1.0)) throw InvalidArgument("c must be at least 1");
  return 8.0 / (epsilon * epsilon) * (num_players - 1) * num_players *
         std::log(c);
}

CountBound EquilibriumCountLowerBound(int num_players, int num_actions,
                                      double c, double epsilon, int k) {
  CheckCommon(num_players, num_actions, epsilon);
  if (k < 1) throw InvalidArgument("k must be positive");
  const double exponent = SmallProbabilityExponent(num_players, c, epsilon);
  CountBound bound;
  bound.log2_count =
      static_cast<double>(k) * num_players * std::log2(num_actions) - 1.0 -
      exponent * std::log2(static_cast<double>(num_players) * num_actions);
  bound.guaranteed = k == KGeneral(num_players, num_actions, epsilon);
  return bound;
}

double Log2ExpectedSamples(int num_players, int num_actions, double c,
                           double epsilon) {
  CheckCommon(num_players, num_actions, epsilon);
  return SmallProbabilityExponent(num_players, c, epsilon) *
         std::log2(static_cast<double>(num_players) * num_actions);
}

double ConcentrationBound(double delta, int degree, double lambda) {
  if (degree < 0 || lambda < 0.0 || delta < 0.0) {
    throw InvalidArgument("concentration bound needs delta, d, lambda >= 0");
  }
  if (degree == 0 || lambda == 0.0) {
    throw Inapplicable(
        "concentration bound needs d >= 1 and lambda > 0; the payoff is "
        "deterministic");
  }
  return 1.0 - 2.0 * std::exp(-(delta * delta) / (degree * lambda * lambda));
}

}  // namespace kuniform
