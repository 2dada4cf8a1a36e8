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
#ifndef KUNIFORM_MULTISET_H_
#define KUNIFORM_MULTISET_H_

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kuniform/game.h"

namespace kuniform {

using BigCount = boost::multiprecision::cpp_int;

// Number of size-k multisets over m symbols, C(m+k-1, k), saturating at
// UINT64_MAX.
std::uint64_t NumMultisets(int num_actions, int k);

// k! / prod_j counts[j]!, the number of ordered sequences with these
// multiplicities.
BigCount Multinomial(std::span<const int> counts);

// Walks the size-k multisets over {0..m-1} in lexicographic order of their
// sorted form: {0,0}, {0,1}, {1,1} for m = k = 2. Maintains the multiplicity
// vector alongside the sorted elements.
class MultisetCursor {
 public:
  MultisetCursor(int num_actions, int k);

  void Reset();
  // Jumps to the given sorted multiset.
  void Assign(std::span<const Action> sorted);
  // Moves to the successor; returns false (and resets) after the last one.
  bool Next();

  int k() const { return static_cast<int>(elements_.size()); }
  std::span<const Action> elements() const { return elements_; }
  std::span<const int> counts() const { return counts_; }

 private:
  int num_actions_;
  std::vector<Action> elements_;
  std::vector<int> counts_;
};

// Lexicographic rank of a sorted multiset, and its inverse.
std::uint64_t MultisetRank(std::span<const Action> sorted, int num_actions);
std::vector<Action> MultisetUnrank(std::uint64_t rank, int num_actions, int k);

}  // namespace kuniform

#endif  // KUNIFORM_MULTISET_H_
