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

#ifndef BITALIGN_EVAL_H_
#define BITALIGN_EVAL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bitalign/alignment_io.h"
#include "bitalign/core.h"

namespace bitalign {

struct GoldSet {
  std::vector<AlignmentEntry> alignments;
};

struct Scores {
  std::size_t tp = 0;  // hypothesis pairs judged correct
  std::size_t fp = 0;
  std::size_t fn = 0;  // gold pairs not recalled
  std::size_t recalled = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  Scores strict;
  Scores lax;
  std::size_t hyp_pairs = 0;   // non-null hypothesis pairs
  std::size_t gold_pairs = 0;  // non-null gold pairs
  std::vector<std::string> notes;
};

struct DocumentBounds {
  std::size_t src = 0;
  std::size_t tgt = 0;
};

// Only non-null pairs count, on both sides. Strict: a hypothesis pair is
// correct iff its index sets equal those of a gold pair. Lax: iff it shares
// at least one source and one target index with a single gold pair. A gold
// pair is recalled (once) if some hypothesis pair matches it under the same
// rule. Precision over zero predictions is reported as 0.
//
// With `bounds`, gold indices are range-checked and a FormatError names the
// first offending line.
EvalReport Evaluate(const std::vector<AlignmentEntry>& hyp, const GoldSet& gold,
                    std::optional<DocumentBounds> bounds = std::nullopt);

EvalReport Evaluate(const AlignmentPath& hyp, const GoldSet& gold,
                    std::optional<DocumentBounds> bounds = std::nullopt);

std::string FormatReportTable(const EvalReport& report);
std::string FormatReportJson(const EvalReport& report);

}  // namespace bitalign

#endif  // BITALIGN_EVAL_H_
