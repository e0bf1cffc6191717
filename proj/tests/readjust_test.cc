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

#include "bitalign/readjust.h"

#include <cmath>

#include <gtest/gtest.h>

#include "bitalign/path.h"
#include "support/synthetic.h"

namespace bitalign {
namespace {

// Rows given as dense 4-d vectors; the matrix normalizes them.
EmbeddingMatrix Rows(std::vector<std::vector<float>> rows) {
  std::vector<float> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return EmbeddingMatrix(4, std::move(flat));
}

Document Blank(std::size_t n) { return Document(std::vector<std::string>(n, "w")); }

const std::vector<float> e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0},
    e4{0, 0, 0, 1};

AlignmentPair P(Span s, Span t) { return {s, t, kNoScore}; }

TEST(SplitTest, TwoTwoPairSplitsIntoPlantedOneToOnes) {
  const Document src = Blank(2), tgt = Blank(2);
  const auto se = Rows({e1, e2});
  const auto te = Rows({e1, {0, 1, 1, 0}});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath in{{P({0, 2}, {0, 2})}};
  const AlignmentPath out = SplitManyToMany(in, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.pairs[0].src, (Span{0, 1}));
  EXPECT_EQ(out.pairs[0].tgt, (Span{0, 1}));
  EXPECT_NEAR(out.pairs[0].score, 1.0, 1e-7);
  EXPECT_EQ(out.pairs[1].src, (Span{1, 2}));
  EXPECT_EQ(out.pairs[1].tgt, (Span{1, 2}));
  EXPECT_NEAR(out.pairs[1].score, std::sqrt(0.5), 1e-7);
  EXPECT_EQ(Readjust(in, bt, AlignConfig{}), out);
}

TEST(SplitTest, ThreeTwoPairLeavesUnmatchedSentenceNull) {
  const Document src = Blank(3), tgt = Blank(2);
  const auto se = Rows({e1, e4, e2});
  const auto te = Rows({e1, e2});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath out =
      Readjust(AlignmentPath{{P({0, 3}, {0, 2})}}, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.pairs[0].src, (Span{0, 1}));
  EXPECT_EQ(out.pairs[1], Deletion(1, 1));
  EXPECT_EQ(out.pairs[2].src, (Span{2, 3}));
  EXPECT_EQ(out.pairs[2].tgt, (Span{1, 2}));
}

TEST(SplitTest, BelowThresholdRemaindersBecomeNulls) {
  // Best sub-pair is 0:0; the leftover 1:1 has similarity 0.
  const Document src = Blank(2), tgt = Blank(2);
  const auto se = Rows({e1, e2});
  const auto te = Rows({e1, e3});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath out =
      SplitManyToMany(AlignmentPath{{P({0, 2}, {0, 2})}}, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.pairs[1], Deletion(1, 1));
  EXPECT_EQ(out.pairs[2], Insertion(1, 2));
}

TEST(SplitTest, KeepsPairThatNoSubPairBeats) {
  const Document src = Blank(2), tgt = Blank(2);
  const auto se = Rows({e1, e2});
  const Bitext bt(src, tgt, se, se);
  const AlignmentPath in{{P({0, 2}, {0, 2})}};
  const AlignmentPath out = SplitManyToMany(in, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.pairs[0].src, (Span{0, 2}));
  EXPECT_NEAR(out.pairs[0].score, 1.0, 1e-7);
}

TEST(SplitTest, OneToManyPairsAreNotSplit) {
  const Document src = Blank(1), tgt = Blank(3);
  const auto se = Rows({e1});
  const auto te = Rows({e1, e2, e3});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath out =
      SplitManyToMany(AlignmentPath{{P({0, 1}, {0, 3})}}, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.pairs[0].tgt, (Span{0, 3}));
}

TEST(ReattachTest, MergesWhenSimilarityRises) {
  const Document src = Blank(2), tgt = Blank(1);
  const auto se = Rows({e1, e2});
  const auto te = Rows({{1, 1, 0, 0}});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath in{{{{0, 1}, {0, 1}, 0.7}, Deletion(1, 1)}};
  const AlignmentPath out = ReattachNulls(in, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.pairs[0].src, (Span{0, 2}));
  EXPECT_NEAR(out.pairs[0].score, 1.0, 1e-7);
}

TEST(ReattachTest, KeepsNullWhenMergeHurts) {
  const Document src = Blank(3), tgt = Blank(2);
  const auto se = Rows({e1, e4, e2});
  const auto te = Rows({e1, e2});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath in{
      {P({0, 1}, {0, 1}), Deletion(1, 1), P({2, 3}, {1, 2})}};
  const AlignmentPath out = ReattachNulls(in, bt, AlignConfig{});
  EXPECT_EQ(out.null_count(), 1u);
  EXPECT_NEAR(out.pairs[0].score, 1.0, 1e-7);  // scores are recomputed
}

TEST(ReattachTest, EqualGainsGoToPrecedingPair) {
  const Document src = Blank(2), tgt = Blank(3);
  const auto se = Rows({{1, 0, 1, 0}, {0, 1, 1, 0}});
  const auto te = Rows({e1, e3, e2});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath in{
      {P({0, 1}, {0, 1}), Insertion(1, 1), P({1, 2}, {2, 3})}};
  const AlignmentPath out = ReattachNulls(in, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.pairs[0].tgt, (Span{0, 2}));
  EXPECT_EQ(out.pairs[1].tgt, (Span{2, 3}));
}

TEST(ReattachTest, ChainsThroughConsecutiveNulls) {
  const Document src = Blank(1), tgt = Blank(3);
  const auto se = Rows({{1, 1, 1, 0}});
  const auto te = Rows({e1, e2, e3});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath in{{P({0, 1}, {0, 1}), Insertion(1, 1), Insertion(2, 1)}};
  const AlignmentPath out = ReattachNulls(in, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.pairs[0].tgt, (Span{0, 3}));
  EXPECT_NEAR(out.pairs[0].score, 1.0, 1e-6);
}

TEST(ReattachTest, LeadingNullCanOnlyJoinFollowingPair) {
  // Target 0 precedes every pair and has no preceding neighbour; it can
  // only join the following pair.
  const Document src = Blank(1), tgt = Blank(2);
  const auto se = Rows({{1, 1, 0, 0}});
  const auto te = Rows({e1, e2});
  const Bitext bt(src, tgt, se, te);
  const AlignmentPath out = ReattachNulls(
      AlignmentPath{{Insertion(0, 0), P({0, 1}, {1, 2})}}, bt, AlignConfig{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.pairs[0].tgt, (Span{0, 2}));
}

TEST(ReadjustTest, PropertiesOnRandomInstances) {
  testing::Rng rng(401);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 7, m = 1 + rng() % 7;
    const auto corpus = testing::MakeRelatedCorpus(n, m, rng);
    const auto se = HashNgramEmbed(corpus.src, 32);
    const auto te = HashNgramEmbed(corpus.tgt, 32);
    const Bitext bt(corpus.src, corpus.tgt, se, te);
    AlignConfig cfg;
    cfg.min_score = 0.2 + 0.1 * (trial % 5);
    const AlignmentPath path = FindPath(bt, cfg);

    const AlignmentPath reattached = ReattachNulls(path, bt, cfg);
    EXPECT_LE(reattached.null_count(), path.null_count());

    const AlignmentPath once = Readjust(path, bt, cfg);
    EXPECT_EQ(Readjust(once, bt, cfg), once) << "trial " << trial;
    EXPECT_FALSE(ValidatePath(once, n, m).has_value());
    EXPECT_FALSE(ValidatePath(SplitManyToMany(path, bt, cfg), n, m).has_value());
  }
}

}  // namespace
}  // namespace bitalign
