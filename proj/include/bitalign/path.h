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

#ifndef BITALIGN_PATH_H_
#define BITALIGN_PATH_H_

#include <cstddef>
#include <optional>
#include <string>

#include "bitalign/core.h"
#include "bitalign/score.h"

namespace bitalign {

// Counters filled in by the path search and the divide-and-conquer driver.
struct AlignStats {
  std::size_t dp_calls = 0;
  std::size_t total_nodes = 0;
  std::size_t max_table_nodes = 0;  // largest single DP table
  std::size_t max_depth = 0;        // deepest DaC recursion level (root = 0)
  std::size_t delimiters = 0;
  std::size_t gc_delimiter_searches = 0;
  std::size_t greedy_delimiter_searches = 0;
};

struct PathSearchResult {
  AlignmentPath path;
  double best_score = 0.0;  // S_node at the terminal node
};

// Maximal-score monotone path through the alignment graph restricted to
// src_range x tgt_range. Indices in the returned path are global. Nodes are
// finalized in row-major order; candidate edges need raw similarity >=
// min_score, and null moves worth min_score are always available. Ties go
// to non-null moves, then fewer merged sentences, then larger source span.
//
// Throws ContractError if (n+1)*(m+1) exceeds cfg.max_nodes.
PathSearchResult SearchPath(const Bitext& bitext, const AlignConfig& cfg,
                            Span src_range, Span tgt_range,
                            AlignStats* stats = nullptr);

PathSearchResult SearchPath(const Bitext& bitext, const AlignConfig& cfg,
                            AlignStats* stats = nullptr);

inline AlignmentPath FindPath(const Bitext& bitext, const AlignConfig& cfg) {
  return SearchPath(bitext, cfg).path;
}

struct PathViolation {
  std::size_t pair_index = 0;
  std::size_t sentence = 0;  // offending sentence index on `side`
  std::string side;          // "source", "target" or "both"
  std::string message;
};

// Checks monotonicity and exhaustive coverage of [0, n) x [0, m) in one
// linear scan. When max_merge > 0, also rejects pairs wider than it.
std::optional<PathViolation> ValidatePath(const AlignmentPath& path,
                                          std::size_t n, std::size_t m,
                                          std::size_t max_merge = 0);

// Sum of edge values along `path` as the search accumulates them (left to
// right, nulls worth min_score, pathfinding-phase penalties).
double PathScore(const Bitext& bitext, const AlignConfig& cfg,
                 const AlignmentPath& path);

}  // namespace bitalign

#endif  // BITALIGN_PATH_H_
