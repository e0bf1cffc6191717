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

#ifndef BITALIGN_GALECHURCH_H_
#define BITALIGN_GALECHURCH_H_

#include <array>
#include <cstddef>
#include <vector>

#include "bitalign/core.h"

namespace bitalign {

// Bead shapes, in the order the DP tries them.
enum class GcMove { k11, k10, k01, k21, k12, k22 };

struct GcMoveShape {
  std::size_t src;
  std::size_t tgt;
};

inline constexpr std::array<GcMoveShape, 6> kGcMoveShapes = {
    {{1, 1}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}}};

struct GCParams {
  double mean_ratio = 1.0;  // expected target chars per source char
  double variance = 6.8;
  // Indexed by GcMove. The classic values: each shape of a symmetric pair
  // (1-0/0-1, 2-1/1-2) carries the full prior, so these do not sum to 1.
  std::array<double, 6> priors = {0.89, 0.0099, 0.0099, 0.089, 0.089, 0.011};

  // Throws ContractError unless priors are in (0, 1] and the length model
  // parameters are positive.
  void Validate() const;
};

// -log prior(move) - log P(delta) for a bead of src_chars/tgt_chars.
double GcBeadCost(std::size_t src_chars, std::size_t tgt_chars, GcMove move,
                  const GCParams& params);

struct GcResult {
  AlignmentPath path;
  double cost = 0.0;
};

// Length-based alignment of src_range x tgt_range using code-point lengths.
// Returned indices are global.
GcResult GcAlign(const Document& src, const Document& tgt,
                 const GCParams& params, Span src_range, Span tgt_range);

GcResult GcAlign(const Document& src, const Document& tgt,
                 const GCParams& params = {});

// Same DP over explicit length sequences.
GcResult GcAlignLengths(const std::vector<std::size_t>& src_lengths,
                        const std::vector<std::size_t>& tgt_lengths,
                        const GCParams& params = {});

}  // namespace bitalign

#endif  // BITALIGN_GALECHURCH_H_
