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

#include <algorithm>
#include <limits>
#include <optional>
#include <tuple>

namespace bitalign {

namespace {

std::size_t NodeCount(std::size_t n, std::size_t m) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  if (n + 1 > kMax / (m + 1)) return kMax;
  return (n + 1) * (m + 1);
}

Vector RowVector(const EmbeddingMatrix& matrix, std::size_t i) {
  return MakeSpanVector(matrix, {i, i + 1});
}

// Ranks delimiter candidates; see FindDelimiter.
struct CandidateRanker {
  std::size_t src_start;
  std::size_t n;
  std::optional<Delimiter> best;

  std::size_t MiddleDistance(std::size_t i) const {
    const std::size_t twice = 2 * (i - src_start);
    return twice > n ? twice - n : n - twice;
  }

  void Offer(std::size_t i, std::size_t j, double score) {
    if (!best) {
      best = Delimiter{i, j, score};
      return;
    }
    if (score != best->score) {
      if (score > best->score) best = Delimiter{i, j, score};
      return;
    }
    const auto key = std::make_tuple(MiddleDistance(i), i, j);
    const auto best_key =
        std::make_tuple(MiddleDistance(best->src), best->src, best->tgt);
    if (key < best_key) best = Delimiter{i, j, score};
  }
};

std::optional<Delimiter> GaleChurchDelimiter(const Bitext& bitext,
                                             Span src_range, Span tgt_range,
                                             Span window,
                                             const GCParams& gc_params) {
  const GcResult gc = GcAlign(bitext.src(), bitext.tgt(), gc_params,
                              src_range, tgt_range);
  CandidateRanker ranker{src_range.start, src_range.size(), std::nullopt};
  for (const auto& p : gc.path.pairs) {
    if (p.src.size() != 1 || p.tgt.size() != 1) continue;
    if (!window.contains(p.src.start)) continue;
    const double s = Similarity(RowVector(bitext.src_emb(), p.src.start),
                                RowVector(bitext.tgt_emb(), p.tgt.start));
    ranker.Offer(p.src.start, p.tgt.start, s);
  }
  return ranker.best;
}

Delimiter GreedyDelimiter(const Bitext& bitext, const AlignConfig& cfg,
                          Span src_range, Span tgt_range, Span window) {
  const std::size_t n = src_range.size();
  const std::size_t m = tgt_range.size();
  CandidateRanker ranker{src_range.start, n, std::nullopt};
  for (std::size_t i = window.start; i < window.end; ++i) {
    const std::size_t rel = i - src_range.start;
    // round(rel * m / n)
    const std::size_t diag = std::min(m - 1, (2 * rel * m + n) / (2 * n));
    const std::size_t lo = diag > cfg.greedy_band ? diag - cfg.greedy_band : 0;
    const std::size_t hi = std::min(m - 1, diag + cfg.greedy_band);
    const Vector u = RowVector(bitext.src_emb(), i);
    for (std::size_t rj = lo; rj <= hi; ++rj) {
      const std::size_t j = tgt_range.start + rj;
      ranker.Offer(i, j, Similarity(u, RowVector(bitext.tgt_emb(), j)));
    }
  }
  return *ranker.best;
}

void AlignChunk(const Bitext& bitext, const AlignConfig& cfg,
                const GCParams& gc_params, Span src_range, Span tgt_range,
                std::size_t depth, AlignStats* stats,
                std::vector<AlignmentPair>& out) {
  if (stats) stats->max_depth = std::max(stats->max_depth, depth);
  const std::size_t n = src_range.size();
  const std::size_t m = tgt_range.size();
  if (NodeCount(n, m) <= cfg.max_nodes) {
    const PathSearchResult r =
        SearchPath(bitext, cfg, src_range, tgt_range, stats);
    out.insert(out.end(), r.path.pairs.begin(), r.path.pairs.end());
    return;
  }
  if (n == 0 || m == 0) {
    // Only null moves exist; no table needed.
    for (std::size_t i = src_range.start; i < src_range.end; ++i) {
      out.push_back(Deletion(i, tgt_range.start));
    }
    for (std::size_t j = tgt_range.start; j < tgt_range.end; ++j) {
      out.push_back(Insertion(j, src_range.start));
    }
    return;
  }
  const Delimiter d =
      FindDelimiter(bitext, cfg, src_range, tgt_range,
                    MiddleHalf(src_range.start, n), stats,
                    DelimiterMethod::kAuto, gc_params);
  if (stats) ++stats->delimiters;
  AlignChunk(bitext, cfg, gc_params, {src_range.start, d.src},
             {tgt_range.start, d.tgt}, depth + 1, stats, out);
  out.push_back({{d.src, d.src + 1}, {d.tgt, d.tgt + 1}, d.score});
  AlignChunk(bitext, cfg, gc_params, {d.src + 1, src_range.end},
             {d.tgt + 1, tgt_range.end}, depth + 1, stats, out);
}

}  // namespace

Span MiddleHalf(std::size_t start, std::size_t n) {
  const std::size_t lo = (n + 3) / 4;
  const std::size_t hi = (3 * n) / 4;
  if (lo >= hi) return {start, start + n};
  return {start + lo, start + hi};
}

Delimiter FindDelimiter(const Bitext& bitext, const AlignConfig& cfg,
                        Span src_range, Span tgt_range, Span window,
                        AlignStats* stats, DelimiterMethod method,
                        const GCParams& gc_params) {
  if (src_range.empty() || tgt_range.empty()) {
    throw ContractError("delimiter search needs two non-empty ranges");
  }
  if (window.empty() || window.start < src_range.start ||
      window.end > src_range.end) {
    throw ContractError("delimiter window must be a non-empty sub-range");
  }
  const bool use_gc =
      method == DelimiterMethod::kGaleChurch ||
      (method == DelimiterMethod::kAuto &&
       NodeCount(src_range.size(), tgt_range.size()) <= cfg.gc_max_nodes);
  std::optional<Delimiter> gc;
  if (use_gc) {
    if (stats) ++stats->gc_delimiter_searches;
    gc = GaleChurchDelimiter(bitext, src_range, tgt_range, window, gc_params);
    // A length model that lost sync proposes only weak pairs; those are not
    // the high-confidence anchors a split needs.
    if (gc && gc->score >= cfg.min_score) return *gc;
  }
  if (stats) ++stats->greedy_delimiter_searches;
  const Delimiter greedy =
      GreedyDelimiter(bitext, cfg, src_range, tgt_range, window);
  if (!gc) return greedy;
  CandidateRanker ranker{src_range.start, src_range.size(), greedy};
  ranker.Offer(gc->src, gc->tgt, gc->score);
  return *ranker.best;
}

AlignmentPath AlignLarge(const Bitext& bitext, const AlignConfig& cfg,
                         AlignStats* stats, const GCParams& gc_params) {
  cfg.Validate();
  gc_params.Validate();
  std::vector<AlignmentPair> pairs;
  pairs.reserve(bitext.src().size() + bitext.tgt().size());
  AlignChunk(bitext, cfg, gc_params, {0, bitext.src().size()},
             {0, bitext.tgt().size()}, 0, stats, pairs);
  return AlignmentPath{std::move(pairs)};
}

}  // namespace bitalign
