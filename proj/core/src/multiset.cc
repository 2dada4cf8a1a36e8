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
#include "kuniform/multiset.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kuniform/errors.h"

namespace kuniform {

std::uint64_t NumMultisets(int num_actions, int k) {
  // C(m+k-1, k) = C(m+k-1, m-1), built incrementally so every partial
  // product is itself a binomial coefficient.
  const std::uint64_t n = static_cast<std::uint64_t>(num_actions) + k - 1;
  const std::uint64_t r = std::min<std::uint64_t>(k, num_actions - 1);
  std::uint64_t value = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // value * (n-r+i) is divisible by i; divide out the common factor first.
    const std::uint64_t g = std::gcd(value, i);
    const std::uint64_t factor = (n - r + i) / (i / g);
    value = SaturatingMul(value / g, factor);
    if (value == std::numeric_limits<std::uint64_t>::max()) return value;
  }
  return value;
}

BigCount Multinomial(std::span<const int> counts) {
  BigCount result = 1;
  int placed = 0;
  for (int c : counts) {
    // Multiply by C(placed + c, c) one factor at a time; each step is exact.
    for (int t = 1; t <= c; ++t) {
      result *= placed + t;
      result /= t;
    }
    placed += c;
  }
  return result;
}

MultisetCursor::MultisetCursor(int num_actions, int k)
    : num_actions_(num_actions), elements_(k, 0), counts_(num_actions, 0) {
  if (num_actions < 1 || k < 1) {
    throw InvalidArgument("multisets need m >= 1 and k >= 1");
  }
  counts_[0] = k;
}

void MultisetCursor::Reset() {
  std::fill(elements_.begin(), elements_.end(), 0);
  std::fill(counts_.begin(), counts_.end(), 0);
  counts_[0] = k();
}

void MultisetCursor::Assign(std::span<const Action> sorted) {
  if (static_cast<int>(sorted.size()) != k()) {
    throw InvalidArgument("multiset size does not match the cursor");
  }
  for (int q = 0; q < k(); ++q) {
    if (sorted[q] < 0 || sorted[q] >= num_actions_ ||
        (q > 0 && sorted[q] < sorted[q - 1])) {
      throw InvalidArgument("multiset must be sorted with actions in range");
    }
  }
  std::fill(counts_.begin(), counts_.end(), 0);
  for (int q = 0; q < k(); ++q) {
    elements_[q] = sorted[q];
    ++counts_[sorted[q]];
  }
}

bool MultisetCursor::Next() {
  const int k = this->k();
  int pos = k - 1;
  while (pos >= 0 && elements_[pos] == num_actions_ - 1) --pos;
  if (pos < 0) {
    Reset();
    return false;
  }
  const Action next = elements_[pos] + 1;
  for (int q = pos; q < k; ++q) {
    --counts_[elements_[q]];
    elements_[q] = next;
  }
  counts_[next] += k - pos;
  return true;
}

std::uint64_t MultisetRank(std::span<const Action> sorted, int num_actions) {
  // Count the multisets that precede `sorted`: at each position q, every
  // smaller admissible value v contributes the number of completions of the
  // remaining k-q-1 slots with values >= v.
  const int k = static_cast<int>(sorted.size());
  std::uint64_t rank = 0;
  Action low = 0;
  for (int q = 0; q < k; ++q) {
    for (Action v = low; v < sorted[q]; ++v) {
      rank += NumMultisets(num_actions - v, k - q - 1);
    }
    low = sorted[q];
  }
  return rank;
}

std::vector<Action> MultisetUnrank(std::uint64_t rank, int num_actions, int k) {
  std::vector<Action> sorted(k);
  Action low = 0;
  for (int q = 0; q < k; ++q) {
    Action v = low;
    while (true) {
      const std::uint64_t block = NumMultisets(num_actions - v, k - q - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    sorted[q] = v;
    low = v;
  }
  return sorted;
}

}  // namespace kuniform
