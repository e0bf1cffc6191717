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

#ifndef BITALIGN_READJUST_H_
#define BITALIGN_READJUST_H_

#include "bitalign/core.h"
#include "bitalign/score.h"

namespace bitalign {

// All comparisons in this module use raw span similarity; there is no
// sentence-count weighting and no merge penalty. Outputs are canonical
// (see Canonicalize) and carry recomputed similarities on non-null pairs.

// For every n-m pair with n > 1 and m > 1, looks for the most similar
// contiguous sub-pair. If it beats the pair, the pair is replaced by it plus
// any further sub-pairs, chosen greedily best-first among the leftover
// sentences on either side of it, that reach cfg.min_score. Anything still
// uncovered becomes 1-sentence null pairs.
AlignmentPath SplitManyToMany(const AlignmentPath& path, const Bitext& bitext,
                              const AlignConfig& cfg);

// Tries to merge each null sentence into the non-null pair next to it in its
// own language; keeps the merge if similarity rises (by more than rounding
// noise). With two
// candidate neighbours the larger gain wins, the preceding pair on a tie.
// Repeats in path order until nothing changes. Pairs may grow past
// cfg.max_merge.
AlignmentPath ReattachNulls(const AlignmentPath& path, const Bitext& bitext,
                            const AlignConfig& cfg);

// SplitManyToMany followed by ReattachNulls, repeated until the path no
// longer changes, so that Readjust(Readjust(p)) == Readjust(p).
AlignmentPath Readjust(const AlignmentPath& path, const Bitext& bitext,
                       const AlignConfig& cfg);

}  // namespace bitalign

#endif  // BITALIGN_READJUST_H_
