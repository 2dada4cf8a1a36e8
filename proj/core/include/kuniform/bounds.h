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
#ifndef KUNIFORM_BOUNDS_H_
#define KUNIFORM_BOUNDS_H_

namespace kuniform {

// Closed-form support sizes and counts. Logarithms are natural; counts that
// overflow doubles are returned as log2 values.

// ceil((8 / eps^2) * d * (ln n + ln m)), at least 1.
int KGraphical(int num_players, int num_actions, int degree, double epsilon);

// KGraphical with d = n - 1.
int KGeneral(int num_players, int num_actions, double epsilon);

// (8 / eps^2) * (n - 1) * n * ln c, the exponent of (nm) shared by the
// equilibrium-count lower bound and the expected sampling cost.
double SmallProbabilityExponent(int num_players, double c, double epsilon);

struct CountBound {
  // log2 of m^(kn) / (2 (nm)^(SmallProbabilityExponent)).
  double log2_count = 0.0;
  // False when k differs from KGeneral(n, m, eps); the bound is then only
  // advisory.
  bool guaranteed = false;
};

CountBound EquilibriumCountLowerBound(int num_players, int num_actions,
                                      double c, double epsilon, int k);

// log2 of the expected number of samples (nm)^(SmallProbabilityExponent).
double Log2ExpectedSamples(int num_players, int num_actions, double c,
                           double epsilon);

// 1 - 2 exp(-delta^2 / (d lambda^2)); may be negative. Throws Inapplicable
// when d == 0 or lambda == 0 (the payoff is then deterministic).
double ConcentrationBound(double delta, int degree, double lambda);

}  // namespace kuniform

#endif  // KUNIFORM_BOUNDS_H_
