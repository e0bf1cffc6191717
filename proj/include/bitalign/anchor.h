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

#ifndef BITALIGN_ANCHOR_H_
#define BITALIGN_ANCHOR_H_

#include <cstddef>

#include "bitalign/core.h"
#include "bitalign/galechurch.h"
#include "bitalign/path.h"
#include "bitalign/score.h"

namespace bitalign {

struct Delimiter {
  std::size_t src = 0;
  std::size_t tgt = 0;
  double score = 0.0;
};

enum class DelimiterMethod { kAuto, kGaleChurch, kGreedy };

// Source window [ceil(n/4), floor(3n/4)) of an n-sentence chunk starting at
// `start`. Falls back to the whole chunk when that window is empty.
Span MiddleHalf(std::size_t start, std::size_t n);

// Picks a 1-1 pair to split src_range x tgt_range at, with its source index
// inside `window`. With kAuto, Gale-Church proposes candidates when the
// chunk's graph has at most cfg.gc_max_nodes nodes; otherwise (or if
// Gale-Church yields no 1-1 pair in the window reaching cfg.min_score) each
// window row is probed on the diagonal +- cfg.greedy_band. The most similar candidate wins; ties
// go to the source index closest to the chunk middle, then the smaller
// indices. Requires non-empty ranges and window.
Delimiter FindDelimiter(const Bitext& bitext, const AlignConfig& cfg,
                        Span src_range, Span tgt_range, Span window,
                        AlignStats* stats = nullptr,
                        DelimiterMethod method = DelimiterMethod::kAuto,
                        const GCParams& gc_params = {});

// Aligns documents of any size. Graphs within cfg.max_nodes go straight to
// SearchPath; larger ones are split at a delimiter from FindDelimiter and
// the two sides are aligned recursively. The delimiter is kept as a 1-1
// pair in the output.
AlignmentPath AlignLarge(const Bitext& bitext, const AlignConfig& cfg,
                         AlignStats* stats = nullptr,
                         const GCParams& gc_params = {});

}  // namespace bitalign

#endif  // BITALIGN_ANCHOR_H_
