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
#include <cstdint>
#include <limits>

namespace bitalign {

namespace {

// P(delta) below this is treated as this; keeps costs finite for very
// unbalanced beads.
constexpr double kMinProbability = 1e-300;

}  // namespace

void GCParams::Validate() const {
  for (double p : priors) {
    if (!(p > 0.0) || !(p <= 1.0)) {
      throw ContractError("Gale-Church priors must be in (0, 1]");
    }
  }
  if (!(mean_ratio > 0.0) || !(variance > 0.0)) {
    throw ContractError("Gale-Church mean ratio and variance must be positive");
  }
}

double GcBeadCost(std::size_t src_chars, std::size_t tgt_chars, GcMove move,
                  const GCParams& params) {
  const double l1 = static_cast<double>(src_chars);
  const double l2 = static_cast<double>(tgt_chars);
  double delta = 0.0;
  if (src_chars + tgt_chars > 0) {
    delta = (l2 - l1 * params.mean_ratio) /
            std::sqrt((l1 + l2) / 2.0 * params.variance);
  }
  // 2 * (1 - Phi(|delta|)) == erfc(|delta| / sqrt(2)).
  double prob = std::erfc(std::fabs(delta) / std::sqrt(2.0));
  if (prob < kMinProbability) prob = kMinProbability;
  return -std::log(params.priors[static_cast<std::size_t>(move)]) -
         std::log(prob);
}

GcResult GcAlignLengths(const std::vector<std::size_t>& src_lengths,
                        const std::vector<std::size_t>& tgt_lengths,
                        const GCParams& params) {
  params.Validate();
  const std::size_t n = src_lengths.size();
  const std::size_t m = tgt_lengths.size();
  const std::size_t width = m + 1;

  std::vector<std::size_t> src_prefix(n + 1, 0), tgt_prefix(m + 1, 0);
  for (std::size_t i = 0; i < n; ++i) src_prefix[i + 1] = src_prefix[i] + src_lengths[i];
  for (std::size_t j = 0; j < m; ++j) tgt_prefix[j + 1] = tgt_prefix[j] + tgt_lengths[j];

  // Costs for rows i, i-1, i-2; back pointers for the whole table.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> rows[3];
  for (auto& r : rows) r.assign(width, kInf);
  std::vector<std::uint8_t> back((n + 1) * width, 0xFF);

  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<double>& cur = rows[i % 3];
    std::fill(cur.begin(), cur.end(), kInf);
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) {
        cur[0] = 0.0;
        continue;
      }
      double best = kInf;
      std::uint8_t pick = 0xFF;
      for (std::size_t mv = 0; mv < kGcMoveShapes.size(); ++mv) {
        const auto [a, b] = kGcMoveShapes[mv];
        if (a > i || b > j) continue;
        const double prev = rows[(i - a) % 3][j - b];
        if (prev == kInf) continue;
        const double c =
            prev + GcBeadCost(src_prefix[i] - src_prefix[i - a],
                              tgt_prefix[j] - tgt_prefix[j - b],
                              static_cast<GcMove>(mv), params);
        if (c < best) {
          best = c;
          pick = static_cast<std::uint8_t>(mv);
        }
      }
      cur[j] = best;
      back[i * width + j] = pick;
    }
  }

  GcResult result;
  result.cost = rows[n % 3][m];
  std::vector<AlignmentPair> pairs;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::uint8_t mv = back[i * width + j];
    if (mv == 0xFF) throw InvariantError("broken Gale-Church back pointer");
    const auto [a, b] = kGcMoveShapes[mv];
    pairs.push_back({{i - a, i}, {j - b, j}, kNoScore});
    i -= a;
    j -= b;
  }
  result.path = Canonicalize(std::move(pairs));
  return result;
}

GcResult GcAlign(const Document& src, const Document& tgt,
                 const GCParams& params, Span src_range, Span tgt_range) {
  if (src_range.end > src.size() || tgt_range.end > tgt.size()) {
    throw ContractError("Gale-Church range outside the documents");
  }
  std::vector<std::size_t> src_lengths, tgt_lengths;
  src_lengths.reserve(src_range.size());
  tgt_lengths.reserve(tgt_range.size());
  for (std::size_t i = src_range.start; i < src_range.end; ++i) {
    src_lengths.push_back(CountCodePoints(src.sentence(i)));
  }
  for (std::size_t j = tgt_range.start; j < tgt_range.end; ++j) {
    tgt_lengths.push_back(CountCodePoints(tgt.sentence(j)));
  }
  GcResult result = GcAlignLengths(src_lengths, tgt_lengths, params);
  // Local canonical order is also the global one; only positions shift.
  for (auto& p : result.path.pairs) {
    p.src.start += src_range.start;
    p.src.end += src_range.start;
    p.tgt.start += tgt_range.start;
    p.tgt.end += tgt_range.start;
  }
  return result;
}

GcResult GcAlign(const Document& src, const Document& tgt,
                 const GCParams& params) {
  return GcAlign(src, tgt, params, {0, src.size()}, {0, tgt.size()});
}

}  // namespace bitalign
