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

#include "bitalign/path.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "parallel.h"

namespace bitalign {

namespace {

constexpr double kUnreachable = -std::numeric_limits<double>::infinity();

// Sims per tile are bounded by this many doubles.
constexpr std::size_t kTileBudget = std::size_t{1} << 19;

// Span vectors for every span of length 1..max_len ending in (lo, hi],
// relative to `base`.
class SpanTable {
 public:
  SpanTable(const EmbeddingMatrix& matrix, std::size_t base, std::size_t lo,
            std::size_t hi, std::size_t max_len)
      : lo_(lo), max_len_(max_len), dim_(matrix.dim()) {
    data_.assign((hi - lo) * max_len * dim_, 0.0);
    for (std::size_t end = lo + 1; end <= hi; ++end) {
      const std::size_t longest = std::min(max_len, end);
      for (std::size_t len = 1; len <= longest; ++len) {
        const Vector v =
            MakeSpanVector(matrix, {base + end - len, base + end});
        std::copy(v.begin(), v.end(), data_.begin() + Offset(end, len));
      }
    }
  }

  std::span<const double> Get(std::size_t end, std::size_t len) const {
    return {data_.data() + Offset(end, len), dim_};
  }

 private:
  std::size_t Offset(std::size_t end, std::size_t len) const {
    return ((end - lo_ - 1) * max_len_ + (len - 1)) * dim_;
  }

  std::size_t lo_;
  std::size_t max_len_;
  std::size_t dim_;
  std::vector<double> data_;
};

std::vector<std::size_t> WordPrefix(const Document& doc, Span range) {
  std::vector<std::size_t> prefix(range.size() + 1, 0);
  for (std::size_t k = 0; k < range.size(); ++k) {
    prefix[k + 1] = prefix[k] + doc.word_counts()[range.start + k];
  }
  return prefix;
}

struct Move {
  double score = kUnreachable;
  std::uint8_t a = 0;  // source sentences consumed
  std::uint8_t b = 0;  // target sentences consumed
};

// Strict "better" under the tie-breaking order.
bool Better(double score, std::size_t a, std::size_t b, const Move& best) {
  if (score != best.score) return score > best.score;
  const bool null = a == 0 || b == 0;
  const bool best_null = best.a == 0 || best.b == 0;
  if (null != best_null) return !null;
  if (a + b != std::size_t{best.a} + best.b) {
    return a + b < std::size_t{best.a} + best.b;
  }
  return a > best.a;
}

}  // namespace

PathSearchResult SearchPath(const Bitext& bitext, const AlignConfig& cfg,
                            Span src_range, Span tgt_range,
                            AlignStats* stats) {
  cfg.Validate();
  if (src_range.end > bitext.src().size() ||
      tgt_range.end > bitext.tgt().size() || src_range.start > src_range.end ||
      tgt_range.start > tgt_range.end) {
    throw ContractError("search range outside the documents");
  }
  const std::size_t n = src_range.size();
  const std::size_t m = tgt_range.size();
  const std::size_t width = m + 1;
  if (n + 1 > cfg.max_nodes / width + 1 ||
      (n + 1) * width > cfg.max_nodes) {
    throw ContractError("alignment graph of " + std::to_string(n + 1) + "x" +
                        std::to_string(width) + " nodes exceeds max_nodes " +
                        std::to_string(cfg.max_nodes));
  }
  const std::size_t nodes = (n + 1) * width;
  if (stats) {
    ++stats->dp_calls;
    stats->total_nodes += nodes;
    stats->max_table_nodes = std::max(stats->max_table_nodes, nodes);
  }

  const std::size_t k = cfg.max_merge;
  const std::size_t kk = k * k;
  const std::size_t threads = internal::ResolveThreads(cfg.threads);
  const auto src_words = WordPrefix(bitext.src(), src_range);
  const auto tgt_words = WordPrefix(bitext.tgt(), tgt_range);

  std::vector<double> best(nodes, kUnreachable);
  std::vector<std::uint8_t> back_a(nodes, 0);
  std::vector<std::uint8_t> back_b(nodes, 0);
  best[0] = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    best[j] = best[j - 1] + cfg.min_score;
    back_b[j] = 1;
  }

  const std::size_t rows_per_block =
      std::clamp<std::size_t>(kTileBudget / (256 * kk), 1, 32);
  const std::size_t cols_per_tile =
      std::max<std::size_t>(1, kTileBudget / (rows_per_block * kk));
  std::vector<double> edge_values;

  for (std::size_t i0 = 1; i0 <= n; i0 += rows_per_block) {
    const std::size_t i1 = std::min(n + 1, i0 + rows_per_block);
    const std::size_t rows = i1 - i0;
    const SpanTable src_spans(bitext.src_emb(), src_range.start, i0 - 1,
                              i1 - 1, k);

    // Column 0 of each row only has the deletion move.
    for (std::size_t i = i0; i < i1; ++i) {
      best[i * width] = best[(i - 1) * width] + cfg.min_score;
      back_a[i * width] = 1;
    }

    for (std::size_t j0 = 1; j0 <= m; j0 += cols_per_tile) {
      const std::size_t j1 = std::min(m + 1, j0 + cols_per_tile);
      const std::size_t cols = j1 - j0;
      const SpanTable tgt_spans(bitext.tgt_emb(), tgt_range.start, j0 - 1,
                                j1 - 1, k);

      // Weighted value of every gated edge in the tile; -inf when the edge
      // is missing or below threshold.
      edge_values.assign(rows * cols * kk, kUnreachable);
      internal::ParallelFor(rows * cols, threads, [&](std::size_t begin,
                                                      std::size_t end) {
        for (std::size_t cell = begin; cell < end; ++cell) {
          const std::size_t i = i0 + cell / cols;
          const std::size_t j = j0 + cell % cols;
          double* out = edge_values.data() + cell * kk;
          const std::size_t max_a = std::min(k, i);
          const std::size_t max_b = std::min(k, j);
          for (std::size_t a = 1; a <= max_a; ++a) {
            const auto u = src_spans.Get(i, a);
            for (std::size_t b = 1; b <= max_b; ++b) {
              const double raw = Similarity(u, tgt_spans.Get(j, b));
              if (!(raw >= cfg.min_score)) continue;
              out[(a - 1) * k + (b - 1)] = WeightedScore(
                  raw, a, b, src_words[i] - src_words[i - a],
                  tgt_words[j] - tgt_words[j - b], cfg, Phase::kPathfinding);
            }
          }
        }
      });

      for (std::size_t i = i0; i < i1; ++i) {
        for (std::size_t j = j0; j < j1; ++j) {
          const std::size_t node = i * width + j;
          const double* values =
              edge_values.data() + ((i - i0) * cols + (j - j0)) * kk;
          Move pick;
          const std::size_t max_a = std::min(k, i);
          const std::size_t max_b = std::min(k, j);
          for (std::size_t a = 1; a <= max_a; ++a) {
            for (std::size_t b = 1; b <= max_b; ++b) {
              const double w = values[(a - 1) * k + (b - 1)];
              if (w == kUnreachable) continue;
              const double s = best[(i - a) * width + (j - b)] + w;
              if (Better(s, a, b, pick)) {
                pick = {s, static_cast<std::uint8_t>(a),
                        static_cast<std::uint8_t>(b)};
              }
            }
          }
          const double del = best[(i - 1) * width + j] + cfg.min_score;
          if (Better(del, 1, 0, pick)) pick = {del, 1, 0};
          const double ins = best[i * width + j - 1] + cfg.min_score;
          if (Better(ins, 0, 1, pick)) pick = {ins, 0, 1};
          best[node] = pick.score;
          back_a[node] = pick.a;
          back_b[node] = pick.b;
        }
      }
    }
  }

  std::vector<AlignmentPair> pairs;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::size_t node = i * width + j;
    const std::size_t a = back_a[node];
    const std::size_t b = back_b[node];
    if (a + b == 0) throw InvariantError("broken back pointer in path search");
    const Span src{src_range.start + i - a, src_range.start + i};
    const Span tgt{tgt_range.start + j - b, tgt_range.start + j};
    double score = kNoScore;
    if (a > 0 && b > 0) {
      score = Similarity(MakeSpanVector(bitext.src_emb(), src),
                         MakeSpanVector(bitext.tgt_emb(), tgt));
    }
    pairs.push_back({src, tgt, score});
    i -= a;
    j -= b;
  }
  std::reverse(pairs.begin(), pairs.end());

  PathSearchResult result;
  result.best_score = best[nodes - 1];
  result.path =
      Canonicalize(std::move(pairs), src_range.start, tgt_range.start);
  return result;
}

PathSearchResult SearchPath(const Bitext& bitext, const AlignConfig& cfg,
                            AlignStats* stats) {
  return SearchPath(bitext, cfg, {0, bitext.src().size()},
                    {0, bitext.tgt().size()}, stats);
}

std::optional<PathViolation> ValidatePath(const AlignmentPath& path,
                                          std::size_t n, std::size_t m,
                                          std::size_t max_merge) {
  std::size_t src_cursor = 0;
  std::size_t tgt_cursor = 0;
  auto check_side = [](std::size_t index, const Span& span,
                       std::size_t& cursor, std::size_t limit,
                       const char* side) -> std::optional<PathViolation> {
    if (span.start > span.end) {
      return PathViolation{index, span.start, side, "inverted span"};
    }
    if (span.start > cursor) {
      return PathViolation{index, cursor, side,
                           std::string(side) + " sentence " +
                               std::to_string(cursor) + " is skipped"};
    }
    if (span.start < cursor) {
      return PathViolation{index, span.start, side,
                           std::string(side) + " sentence " +
                               std::to_string(span.start) +
                               " is covered twice"};
    }
    if (span.end > limit) {
      return PathViolation{index, limit, side,
                           std::string(side) + " span runs past the document"};
    }
    cursor = span.end;
    return std::nullopt;
  };

  for (std::size_t idx = 0; idx < path.pairs.size(); ++idx) {
    const AlignmentPair& p = path.pairs[idx];
    if (p.src.empty() && p.tgt.empty()) {
      return PathViolation{idx, src_cursor, "both",
                           "pair has two empty sides"};
    }
    if (auto v = check_side(idx, p.src, src_cursor, n, "source")) return v;
    if (auto v = check_side(idx, p.tgt, tgt_cursor, m, "target")) return v;
    if (max_merge > 0 && (p.src.size() > max_merge || p.tgt.size() > max_merge)) {
      return PathViolation{idx, p.src.start, "both",
                           "pair exceeds the merge window"};
    }
  }
  if (src_cursor != n) {
    return PathViolation{path.pairs.size(), src_cursor, "source",
                         "source sentences from " + std::to_string(src_cursor) +
                             " are not covered"};
  }
  if (tgt_cursor != m) {
    return PathViolation{path.pairs.size(), tgt_cursor, "target",
                         "target sentences from " + std::to_string(tgt_cursor) +
                             " are not covered"};
  }
  return std::nullopt;
}

double PathScore(const Bitext& bitext, const AlignConfig& cfg,
                 const AlignmentPath& path) {
  double total = 0.0;
  for (const auto& p : path.pairs) {
    if (p.is_null()) {
      total += cfg.min_score * static_cast<double>(p.src.size() + p.tgt.size());
      continue;
    }
    const double raw = Similarity(MakeSpanVector(bitext.src_emb(), p.src),
                                  MakeSpanVector(bitext.tgt_emb(), p.tgt));
    total += WeightedScore(raw, p.src.size(), p.tgt.size(),
                           SpanWords(bitext.src(), p.src),
                           SpanWords(bitext.tgt(), p.tgt), cfg,
                           Phase::kPathfinding);
  }
  return total;
}

}  // namespace bitalign
