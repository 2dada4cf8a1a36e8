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

#include <gtest/gtest.h>

#include "kuniform/errors.h"

namespace kuniform {
namespace {

std::uint64_t Binomial(int n, int r) {
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

TEST(NumMultisetsTest, MatchesBinomial) {
  for (int m = 1; m <= 8; ++m) {
    for (int k = 1; k <= 12; ++k) {
      EXPECT_EQ(NumMultisets(m, k), Binomial(m + k - 1, k)) << m << " " << k;
    }
  }
  EXPECT_EQ(NumMultisets(2, 45), 46u);
}

TEST(NumMultisetsTest, Saturates) {
  EXPECT_EQ(NumMultisets(1000, 1000), UINT64_MAX);
}

TEST(MultinomialTest, Values) {
  EXPECT_EQ(Multinomial(std::vector<int>{1, 1}), 2);
  EXPECT_EQ(Multinomial(std::vector<int>{2, 0}), 1);
  EXPECT_EQ(Multinomial(std::vector<int>{2, 1, 1}), 12);
  BigCount expected = 1;
  for (int i = 31; i <= 60; ++i) expected *= i;
  for (int i = 2; i <= 30; ++i) expected /= i;
  EXPECT_EQ(Multinomial(std::vector<int>{30, 30}), expected);
}

TEST(MultinomialTest, SumsToOrderedCount) {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 6; ++k) {
      MultisetCursor cursor(m, k);
      BigCount total = 0;
      do total += Multinomial(cursor.counts()); while (cursor.Next());
      BigCount ordered = 1;
      for (int i = 0; i < k; ++i) ordered *= m;
      EXPECT_EQ(total, ordered);
    }
  }
}

TEST(MultisetCursorTest, LexicographicAndComplete) {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 5; ++k) {
      MultisetCursor cursor(m, k);
      std::vector<std::vector<Action>> seen;
      do {
        std::vector<Action> e(cursor.elements().begin(), cursor.elements().end());
        EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
        std::vector<int> counts(m, 0);
        for (Action a : e) ++counts[a];
        EXPECT_EQ(counts, std::vector<int>(cursor.counts().begin(), cursor.counts().end()));
        EXPECT_EQ(MultisetRank(e, m), seen.size());
        EXPECT_EQ(MultisetUnrank(seen.size(), m, k), e);
        if (!seen.empty()) EXPECT_LT(seen.back(), e);
        seen.push_back(std::move(e));
      } while (cursor.Next());
      EXPECT_EQ(seen.size(), NumMultisets(m, k));
      // Next() wrapped around to the first multiset.
      EXPECT_EQ(std::vector<Action>(cursor.elements().begin(), cursor.elements().end()),
                seen.front());
    }
  }
}

TEST(MultisetCursorTest, AssignResumes) {
  MultisetCursor a(3, 4), b(3, 4);
  for (int i = 0; i < 7; ++i) a.Next();
  b.Assign(MultisetUnrank(7, 3, 4));
  do {
    EXPECT_TRUE(std::ranges::equal(a.elements(), b.elements()));
    EXPECT_TRUE(std::ranges::equal(a.counts(), b.counts()));
    b.Next();
  } while (a.Next());
}

TEST(MultisetCursorTest, RejectsUnsorted) {
  MultisetCursor c(3, 2);
  EXPECT_THROW(c.Assign(std::vector<Action>{2, 1}), InvalidArgument);
}

}  // namespace
}  // namespace kuniform
