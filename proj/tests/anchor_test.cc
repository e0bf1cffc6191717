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

#include "bitalign/anchor.h"

#include <gtest/gtest.h>

#include "support/synthetic.h"

namespace bitalign {
namespace {

struct Fixture {
  testing::SyntheticCorpus corpus;
  EmbeddingMatrix se, te;
  Bitext bitext() const { return Bitext(corpus.src, corpus.tgt, se, te); }
};

Fixture MakeFixture(std::size_t n, std::uint64_t seed, double noise) {
  testing::Rng rng(seed);
  Fixture f{testing::MakeCopyCorpus(n, rng, noise), {}, {}};
  // Wide buckets keep unrelated sentences near-orthogonal, so noise is not
  // worth absorbing into merges and the full search aligns copies 1-1.
  f.se = HashNgramEmbed(f.corpus.src, 4096);
  f.te = HashNgramEmbed(f.corpus.tgt, 4096);
  return f;
}

TEST(MiddleHalfTest, Windows) {
  EXPECT_EQ(MiddleHalf(0, 8), (Span{2, 6}));
  EXPECT_EQ(MiddleHalf(10, 9), (Span{13, 16}));
  EXPECT_EQ(MiddleHalf(0, 3), (Span{1, 2}));
  EXPECT_EQ(MiddleHalf(4, 2), (Span{4, 6}));  // empty middle: whole chunk
  EXPECT_EQ(MiddleHalf(7, 1), (Span{7, 8}));
}

TEST(FindDelimiterTest, PicksPlantedCopyInWindow) {
  const Fixture f = MakeFixture(60, 301, 0.2);
  const Bitext bt = f.bitext();
  const Span src{0, f.corpus.src.size()}, tgt{0, f.corpus.tgt.size()};
  const Span window = MiddleHalf(0, src.size());
  for (auto method : {DelimiterMethod::kGaleChurch, DelimiterMethod::kGreedy}) {
    AlignStats stats;
    const Delimiter d =
        FindDelimiter(bt, AlignConfig{}, src, tgt, window, &stats, method);
    EXPECT_TRUE(window.contains(d.src));
    EXPECT_NEAR(d.score, 1.0, 1e-6);
    EXPECT_EQ(f.corpus.src.sentence(d.src), f.corpus.tgt.sentence(d.tgt));
  }
}

TEST(FindDelimiterTest, TiesPreferTheMiddle) {
  // All rows identical: every candidate scores 1.
  const Document d({"a", "a", "a", "a", "a", "a", "a", "a"});
  const EmbeddingMatrix e(2, std::vector<float>(16, 1.0f));
  const Bitext bt(d, d, e, e);
  const Delimiter got = FindDelimiter(bt, AlignConfig{}, {0, 8}, {0, 8},
                                      MiddleHalf(0, 8), nullptr,
                                      DelimiterMethod::kGreedy);
  EXPECT_EQ(got.src, 4u);
  EXPECT_EQ(got.tgt, 0u);  // band reaches target 0 from diagonal 4 +- 5
}

TEST(FindDelimiterTest, AutoSwitchesToGreedy) {
  const Fixture f = MakeFixture(30, 302, 0.0);
  const Bitext bt = f.bitext();
  AlignConfig cfg;
  AlignStats stats;
  FindDelimiter(bt, cfg, {0, 30}, {0, 30}, {8, 22}, &stats);
  EXPECT_EQ(stats.gc_delimiter_searches, 1u);
  EXPECT_EQ(stats.greedy_delimiter_searches, 0u);
  cfg.gc_max_nodes = 100;
  FindDelimiter(bt, cfg, {0, 30}, {0, 30}, {8, 22}, &stats);
  EXPECT_EQ(stats.greedy_delimiter_searches, 1u);
}

TEST(FindDelimiterTest, Contracts) {
  const Fixture f = MakeFixture(10, 303, 0.0);
  const Bitext bt = f.bitext();
  EXPECT_THROW(FindDelimiter(bt, AlignConfig{}, {0, 0}, {0, 10}, {0, 0}),
               ContractError);
  EXPECT_THROW(FindDelimiter(bt, AlignConfig{}, {2, 10}, {0, 10}, {0, 5}),
               ContractError);
}

TEST(AlignLargeTest, SmallBudgetMatchesFullSearch) {
  for (std::uint64_t seed = 310; seed < 316; ++seed) {
    const Fixture f = MakeFixture(80, seed, 0.1);
    const Bitext bt = f.bitext();
    AlignConfig full;
    full.max_nodes = std::numeric_limits<std::size_t>::max();
    AlignConfig small;
    small.max_nodes = 500;
    AlignStats stats;
    const AlignmentPath got = AlignLarge(bt, small, &stats);
    EXPECT_EQ(got, FindPath(bt, full)) << "seed " << seed;
    EXPECT_LE(stats.max_table_nodes, 500u);
    EXPECT_GT(stats.delimiters, 0u);
    EXPECT_GT(stats.max_depth, 0u);
    EXPECT_FALSE(
        ValidatePath(got, f.corpus.src.size(), f.corpus.tgt.size()).has_value());
  }
}

TEST(AlignLargeTest, WithinBudgetIsOneSearch) {
  const Fixture f = MakeFixture(20, 320, 0.0);
  AlignStats stats;
  AlignLarge(f.bitext(), AlignConfig{}, &stats);
  EXPECT_EQ(stats.dp_calls, 1u);
  EXPECT_EQ(stats.delimiters, 0u);
}

TEST(AlignLargeTest, OneEmptySideNeedsNoTable) {
  const Document empty, many(std::vector<std::string>(50, "line"));
  const EmbeddingMatrix none = HashNgramEmbed(empty, 16);
  const EmbeddingMatrix e = HashNgramEmbed(many, 16);
  AlignConfig cfg;
  cfg.max_nodes = 10;
  AlignStats stats;
  const AlignmentPath p = AlignLarge(Bitext(many, empty, e, none), cfg, &stats);
  EXPECT_EQ(p.size(), 50u);
  EXPECT_EQ(p.null_count(), 50u);
  EXPECT_EQ(stats.dp_calls, 0u);
}

}  // namespace
}  // namespace bitalign
