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

#ifndef BITALIGN_SCORE_H_
#define BITALIGN_SCORE_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "bitalign/core.h"
#include "bitalign/embed.h"

namespace bitalign {

// Two documents and their sentence embeddings. Holds references; the
// referenced objects must outlive it.
class Bitext {
 public:
  // Throws ContractError if a matrix does not match its document or the two
  // matrices differ in dimension.
  Bitext(const Document& src, const Document& tgt,
         const EmbeddingMatrix& src_emb, const EmbeddingMatrix& tgt_emb);

  const Document& src() const { return src_; }
  const Document& tgt() const { return tgt_; }
  const EmbeddingMatrix& src_emb() const { return src_emb_; }
  const EmbeddingMatrix& tgt_emb() const { return tgt_emb_; }

 private:
  const Document& src_;
  const Document& tgt_;
  const EmbeddingMatrix& src_emb_;
  const EmbeddingMatrix& tgt_emb_;
};

// The merge-count penalty only exists while searching for the path.
enum class Phase { kPathfinding, kReadjustment };

struct EdgeScore {
  AlignmentPair pair;
  double raw_sim = 0.0;
  double weighted = 0.0;
  bool is_null = false;
};

std::size_t SpanWords(const Document& doc, Span span);

// raw * (src_len + tgt_len), minus the per-side excess-word penalty and, in
// the pathfinding phase, the excess-merge penalty. The evaluation order here
// is the reference order every caller must reproduce.
double WeightedScore(double raw_sim, std::size_t src_len, std::size_t tgt_len,
                     std::size_t src_words, std::size_t tgt_words,
                     const AlignConfig& cfg, Phase phase);

// Scores one non-null candidate. Throws ContractError for empty or
// out-of-range spans.
EdgeScore ScoreEdge(const Bitext& bitext, Span src, Span tgt,
                    SpanVectorCache& src_cache, SpanVectorCache& tgt_cache,
                    const AlignConfig& cfg, Phase phase);

// All (src, tgt) span pairs ending at node (i, j): sizes 1..min(max_merge,i)
// by 1..min(max_merge,j). Ordered by source size, then target size.
std::vector<std::pair<Span, Span>> CandidateEdges(std::size_t i, std::size_t j,
                                                  const AlignConfig& cfg);

}  // namespace bitalign

#endif  // BITALIGN_SCORE_H_
