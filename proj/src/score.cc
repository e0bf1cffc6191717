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

#include "bitalign/score.h"

#include <algorithm>

namespace bitalign {

Bitext::Bitext(const Document& src, const Document& tgt,
               const EmbeddingMatrix& src_emb, const EmbeddingMatrix& tgt_emb)
    : src_(src), tgt_(tgt), src_emb_(src_emb), tgt_emb_(tgt_emb) {
  if (src_emb.count() != src.size()) {
    throw ContractError("source embeddings: " + std::to_string(src_emb.count()) +
                        " rows for " + std::to_string(src.size()) +
                        " sentences");
  }
  if (tgt_emb.count() != tgt.size()) {
    throw ContractError("target embeddings: " + std::to_string(tgt_emb.count()) +
                        " rows for " + std::to_string(tgt.size()) +
                        " sentences");
  }
  if (src.size() > 0 && tgt.size() > 0 && src_emb.dim() != tgt_emb.dim()) {
    throw ContractError("source and target embedding dims differ");
  }
}

std::size_t SpanWords(const Document& doc, Span span) {
  std::size_t words = 0;
  for (std::size_t i = span.start; i < span.end; ++i) {
    words += doc.word_counts()[i];
  }
  return words;
}

double WeightedScore(double raw_sim, std::size_t src_len, std::size_t tgt_len,
                     std::size_t src_words, std::size_t tgt_words,
                     const AlignConfig& cfg, Phase phase) {
  const std::size_t sentences = src_len + tgt_len;
  const double src_excess =
      src_words > cfg.max_words ? static_cast<double>(src_words - cfg.max_words)
                                : 0.0;
  const double tgt_excess =
      tgt_words > cfg.max_words ? static_cast<double>(tgt_words - cfg.max_words)
                                : 0.0;
  const double word_penalty =
      cfg.word_penalty * src_excess + cfg.word_penalty * tgt_excess;
  double merge_penalty = 0.0;
  if (phase == Phase::kPathfinding && sentences > cfg.merge_penalty_free) {
    merge_penalty = cfg.merge_penalty *
                    static_cast<double>(sentences - cfg.merge_penalty_free);
  }
  return raw_sim * static_cast<double>(sentences) - word_penalty -
         merge_penalty;
}

EdgeScore ScoreEdge(const Bitext& bitext, Span src, Span tgt,
                    SpanVectorCache& src_cache, SpanVectorCache& tgt_cache,
                    const AlignConfig& cfg, Phase phase) {
  if (src.empty() || tgt.empty()) {
    throw ContractError("ScoreEdge needs two non-empty spans");
  }
  if (src.end > bitext.src().size() || tgt.end > bitext.tgt().size()) {
    throw ContractError("ScoreEdge span out of bounds");
  }
  EdgeScore e;
  e.raw_sim = SpanSimilarity(src_cache, src, tgt_cache, tgt);
  e.weighted = WeightedScore(e.raw_sim, src.size(), tgt.size(),
                             SpanWords(bitext.src(), src),
                             SpanWords(bitext.tgt(), tgt), cfg, phase);
  e.pair = {src, tgt, e.raw_sim};
  e.is_null = false;
  return e;
}

std::vector<std::pair<Span, Span>> CandidateEdges(std::size_t i, std::size_t j,
                                                  const AlignConfig& cfg) {
  std::vector<std::pair<Span, Span>> out;
  const std::size_t max_a = std::min(cfg.max_merge, i);
  const std::size_t max_b = std::min(cfg.max_merge, j);
  out.reserve(max_a * max_b);
  for (std::size_t a = 1; a <= max_a; ++a) {
    for (std::size_t b = 1; b <= max_b; ++b) {
      out.push_back({{i - a, i}, {j - b, j}});
    }
  }
  return out;
}

}  // namespace bitalign
