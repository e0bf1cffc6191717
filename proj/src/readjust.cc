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

#include <optional>

namespace bitalign {

namespace {

// Safety net for the Readjust fixpoint. Each round raises the sum of pair
// similarities by more than kMinGain, so it cannot cycle; this only bounds
// run time.
constexpr int kMaxRounds = 1000;

// Similarity gains at or below this are rounding noise (for example, the
// cosine of two identical merged spans can land a few ulps under 1).
constexpr double kMinGain = 1e-9;

struct Caches {
  SpanVectorCache src;
  SpanVectorCache tgt;

  explicit Caches(const Bitext& bitext)
      : src(bitext.src_emb()), tgt(bitext.tgt_emb()) {}

  double Sim(Span s, Span t) { return SpanSimilarity(src, s, tgt, t); }
};

struct Candidate {
  Span src;
  Span tgt;
  double sim;
};

// Most similar contiguous (src', tgt') inside src x tgt, optionally skipping
// the full pair. First in enumeration order wins ties.
std::optional<Candidate> BestSubPair(Caches& caches, Span src, Span tgt,
                                     bool exclude_full) {
  std::optional<Candidate> best;
  for (std::size_t s0 = src.start; s0 < src.end; ++s0) {
    for (std::size_t s1 = s0 + 1; s1 <= src.end; ++s1) {
      for (std::size_t t0 = tgt.start; t0 < tgt.end; ++t0) {
        for (std::size_t t1 = t0 + 1; t1 <= tgt.end; ++t1) {
          const Span a{s0, s1};
          const Span b{t0, t1};
          if (exclude_full && a == src && b == tgt) continue;
          const double sim = caches.Sim(a, b);
          if (!best || sim > best->sim) best = Candidate{a, b, sim};
        }
      }
    }
  }
  return best;
}

// Best-first fill of src x tgt with sub-pairs reaching min_score.
void GreedyFill(Caches& caches, const AlignConfig& cfg, Span src, Span tgt,
                std::vector<AlignmentPair>& out) {
  if (src.empty() || tgt.empty()) return;
  const auto best = BestSubPair(caches, src, tgt, /*exclude_full=*/false);
  if (!best || !(best->sim >= cfg.min_score)) return;
  out.push_back({best->src, best->tgt, best->sim});
  GreedyFill(caches, cfg, {src.start, best->src.start},
             {tgt.start, best->tgt.start}, out);
  GreedyFill(caches, cfg, {best->src.end, src.end}, {best->tgt.end, tgt.end},
             out);
}

void AddNulls(Span src, Span tgt, const std::vector<AlignmentPair>& covered,
              std::vector<AlignmentPair>& out) {
  for (std::size_t i = src.start; i < src.end; ++i) {
    bool hit = false;
    for (const auto& p : covered) hit = hit || p.src.contains(i);
    if (!hit) out.push_back(Deletion(i, 0));
  }
  for (std::size_t j = tgt.start; j < tgt.end; ++j) {
    bool hit = false;
    for (const auto& p : covered) hit = hit || p.tgt.contains(j);
    if (!hit) out.push_back(Insertion(j, 0));
  }
}

AlignmentPath Split(const AlignmentPath& path, Caches& caches,
                    const AlignConfig& cfg) {
  std::vector<AlignmentPair> out;
  out.reserve(path.pairs.size());
  for (const auto& p : path.pairs) {
    if (p.is_null()) {
      out.push_back(p);
      continue;
    }
    const double original = caches.Sim(p.src, p.tgt);
    if (p.src.size() < 2 || p.tgt.size() < 2) {
      out.push_back({p.src, p.tgt, original});
      continue;
    }
    const auto best = BestSubPair(caches, p.src, p.tgt, /*exclude_full=*/true);
    if (!best || !(best->sim > original + kMinGain)) {
      out.push_back({p.src, p.tgt, original});
      continue;
    }
    std::vector<AlignmentPair> parts{{best->src, best->tgt, best->sim}};
    GreedyFill(caches, cfg, {p.src.start, best->src.start},
               {p.tgt.start, best->tgt.start}, parts);
    GreedyFill(caches, cfg, {best->src.end, p.src.end},
               {best->tgt.end, p.tgt.end}, parts);
    AddNulls(p.src, p.tgt, parts, out);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return Canonicalize(std::move(out));
}

AlignmentPath Reattach(const AlignmentPath& path, Caches& caches) {
  std::vector<AlignmentPair> pairs = Canonicalize(path.pairs).pairs;
  for (auto& p : pairs) {
    if (!p.is_null()) p.score = caches.Sim(p.src, p.tgt);
  }

  auto prev_aligned = [&](std::size_t idx) -> std::optional<std::size_t> {
    while (idx > 0) {
      --idx;
      if (!pairs[idx].is_null()) return idx;
    }
    return std::nullopt;
  };
  auto next_aligned = [&](std::size_t idx) -> std::optional<std::size_t> {
    for (++idx; idx < pairs.size(); ++idx) {
      if (!pairs[idx].is_null()) return idx;
    }
    return std::nullopt;
  };

  std::size_t idx = 0;
  while (idx < pairs.size()) {
    const AlignmentPair null = pairs[idx];
    if (!null.is_null()) {
      ++idx;
      continue;
    }
    const bool is_src = !null.src.empty();
    const std::size_t k = is_src ? null.src.start : null.tgt.start;

    // Enlarged pair and its gain for a neighbour, if adjacent.
    auto try_merge = [&](std::optional<std::size_t> at, bool before)
        -> std::optional<std::pair<AlignmentPair, double>> {
      if (!at) return std::nullopt;
      AlignmentPair grown = pairs[*at];
      Span& side = is_src ? grown.src : grown.tgt;
      if (before) {
        if (side.end != k) return std::nullopt;
        side.end = k + 1;
      } else {
        if (side.start != k + 1) return std::nullopt;
        side.start = k;
      }
      grown.score = caches.Sim(grown.src, grown.tgt);
      return std::make_pair(grown, grown.score - pairs[*at].score);
    };

    const auto p = prev_aligned(idx);
    const auto q = next_aligned(idx);
    const auto via_prev = try_merge(p, /*before=*/true);
    const auto via_next = try_merge(q, /*before=*/false);
    const bool prev_ok = via_prev && via_prev->second > kMinGain;
    const bool next_ok = via_next && via_next->second > kMinGain;
    if (!prev_ok && !next_ok) {
      ++idx;
      continue;
    }
    std::size_t target;
    if (prev_ok && (!next_ok || via_prev->second >= via_next->second)) {
      target = *p;
      pairs[target] = via_prev->first;
    } else {
      target = *q;
      pairs[target] = via_next->first;
    }
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(idx));
    if (target > idx) --target;
    // Only nulls next to the amended pair can change status; they sit in
    // the gaps directly before and after it.
    const auto before = prev_aligned(target);
    idx = before ? *before + 1 : 0;
  }
  return Canonicalize(std::move(pairs));
}

}  // namespace

AlignmentPath SplitManyToMany(const AlignmentPath& path, const Bitext& bitext,
                              const AlignConfig& cfg) {
  Caches caches(bitext);
  return Split(path, caches, cfg);
}

AlignmentPath ReattachNulls(const AlignmentPath& path, const Bitext& bitext,
                            const AlignConfig&) {
  Caches caches(bitext);
  return Reattach(path, caches);
}

AlignmentPath Readjust(const AlignmentPath& path, const Bitext& bitext,
                       const AlignConfig& cfg) {
  Caches caches(bitext);
  AlignmentPath current = path;
  for (int round = 0; round < kMaxRounds; ++round) {
    AlignmentPath next = Reattach(Split(current, caches, cfg), caches);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace bitalign
