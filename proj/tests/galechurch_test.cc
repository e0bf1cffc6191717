// Copyright 2026 The bitalign Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bitalign/galechurch.h"

#include <cmath>

#include <gtest/gtest.h>

#include "bitalign/path.h"
#include "support/oracles.h"
#include "support/synthetic.h"

namespace bitalign {
namespace {

TEST(GcBeadCostTest, KnownValues) {
  const GCParams p;
  // delta == 0: only the prior contributes.
  EXPECT_DOUBLE_EQ(GcBeadCost(40, 40, GcMove::k11, p), -std::log(0.89));
  EXPECT_DOUBLE_EQ(GcBeadCost(0, 0, GcMove::k11, p), -std::log(0.89));
  // l1 = 10, l2 = 0: delta = -10 / sqrt(5 * 6.8).
  const double delta = 10.0 / std::sqrt(34.0);
  EXPECT_NEAR(GcBeadCost(10, 0, GcMove::k10, p),
              -std::log(0.0099) - std::log(std::erfc(delta / std::sqrt(2.0))),
              1e-12);
  // |delta| == 1: P = 2 * (1 - Phi(1)).
  GCParams unit;
  unit.variance = 2.0 / 3.0;  // makes (l1 + l2) / 2 * s2 == 1 for l1 + l2 == 3
  const double cost = GcBeadCost(1, 2, GcMove::k11, unit);
  EXPECT_NEAR(cost, -std::log(0.89) - std::log(0.31731050786291415), 1e-12);
}

TEST(GcBeadCostTest, GrowsWithMismatch) {
  const GCParams p;
  double last = GcBeadCost(50, 50, GcMove::k11, p);
  for (std::size_t l2 = 52; l2 < 120; l2 += 4) {
    const double c = GcBeadCost(50, l2, GcMove::k11, p);
    EXPECT_GT(c, last);
    last = c;
  }
  EXPECT_TRUE(std::isfinite(GcBeadCost(1, 100000, GcMove::k11, p)));
}

TEST(GcAlignTest, MatchesBruteForce) {
  testing::Rng rng(201);
  std::uniform_int_distribution<std::size_t> len(1, 80);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<std::size_t> a(rng() % 7), b(rng() % 7);
    for (auto& x : a) x = len(rng);
    for (auto& x : b) x = len(rng);
    const GCParams p;
    const GcResult r = GcAlignLengths(a, b, p);
    EXPECT_EQ(r.cost, testing::BruteForceGcCost(a, b, p)) << "trial " << trial;
    EXPECT_FALSE(ValidatePath(r.path, a.size(), b.size(), 2).has_value());
  }
}

TEST(GcAlignTest, RecoversMergeStructure) {
  // Target 1 is source 1 + source 2 in length; everything else 1-1.
  const GcResult r = GcAlignLengths({30, 20, 25, 60}, {31, 46, 58});
  ASSERT_EQ(r.path.size(), 3u);
  EXPECT_EQ(r.path.pairs[1].src, (Span{1, 3}));
  EXPECT_EQ(r.path.pairs[1].tgt, (Span{1, 2}));
  EXPECT_TRUE(std::isnan(r.path.pairs[1].score));
}

TEST(GcAlignTest, CountsCodePoints) {
  // Same visible lengths, very different byte lengths.
  const Document src({"\xC3\xA9\xC3\xA9\xC3\xA9\xC3\xA9\xC3\xA9", "abc"});
  const Document tgt({"eeeee", "abc"});
  const GcResult r = GcAlign(src, tgt);
  EXPECT_DOUBLE_EQ(r.cost, 2 * -std::log(0.89));
}

TEST(GcAlignTest, RangesAreGlobal) {
  const Document src({"x", "aaaaaaaaaa", "bbbbbbbbbbbbbbbbbbbb", "y"});
  const Document tgt({"q", "r", "cccccccccc", "dddddddddddddddddddd"});
  const GcResult r = GcAlign(src, tgt, {}, {1, 3}, {2, 4});
  ASSERT_EQ(r.path.size(), 2u);
  EXPECT_EQ(r.path.pairs[0].src, (Span{1, 2}));
  EXPECT_EQ(r.path.pairs[0].tgt, (Span{2, 3}));
  EXPECT_EQ(r.path.pairs[1].src, (Span{2, 3}));
}

TEST(GcAlignTest, EmptySide) {
  const GcResult r = GcAlignLengths({}, {5, 6});
  ASSERT_EQ(r.path.size(), 2u);
  EXPECT_EQ(r.path.null_count(), 2u);
  EXPECT_TRUE(GcAlignLengths({}, {}).path.empty());
}

TEST(GCParamsTest, Validation) {
  GCParams p;
  EXPECT_NO_THROW(p.Validate());
  p.priors[3] = 0.0;
  EXPECT_THROW(p.Validate(), ContractError);
  p = {};
  p.variance = 0;
  EXPECT_THROW(p.Validate(), ContractError);
  EXPECT_THROW(GcAlignLengths({1}, {1}, p), ContractError);
}

}  // namespace
}  // namespace bitalign
