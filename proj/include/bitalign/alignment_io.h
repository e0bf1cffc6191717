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

#ifndef BITALIGN_ALIGNMENT_IO_H_
#define BITALIGN_ALIGNMENT_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitalign/core.h"

namespace bitalign {

// One line of an alignment file: `<src>:<tgt>` where each side is a
// comma-separated list of 0-based indices and may be empty, optionally
// followed by a tab and a similarity (or NA). Lines starting with '#' are
// comments.
struct AlignmentEntry {
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  std::optional<double> score;
  std::size_t line = 0;  // 1-based line number in the source file

  bool is_null() const { return src.empty() || tgt.empty(); }
};

// Throws FormatError naming the offending line.
std::vector<AlignmentEntry> ParseAlignments(std::string_view text);
std::vector<AlignmentEntry> LoadAlignments(const std::string& path);

std::vector<AlignmentEntry> ToEntries(const AlignmentPath& path);

// LF-terminated lines, no spaces. With `with_scores`, appends a tab and the
// pair similarity with six decimals, or NA for nulls.
std::string FormatAlignments(const AlignmentPath& path, bool with_scores);

}  // namespace bitalign

#endif  // BITALIGN_ALIGNMENT_IO_H_
