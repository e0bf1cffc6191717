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

#ifndef BITALIGN_CORE_H_
#define BITALIGN_CORE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bitalign {

// Error hierarchy. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable files, malformed input files.
class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Caller broke a precondition (bad span, mismatched sizes, bad config).
class ContractError : public Error {
 public:
  using Error::Error;
};

// An internal postcondition failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Number of maximal runs of non-whitespace bytes.
std::size_t CountWords(std::string_view text);

// Number of Unicode code points in a UTF-8 string (continuation bytes are
// not counted; the input is assumed valid).
std::size_t CountCodePoints(std::string_view text);

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t FindInvalidUtf8(std::string_view text);

// One side of a parallel text: pre-segmented sentences.
class Document {
 public:
  Document() = default;
  explicit Document(std::vector<std::string> sentences);

  std::size_t size() const { return sentences_.size(); }
  bool empty() const { return sentences_.empty(); }

  const std::vector<std::string>& sentences() const { return sentences_; }
  const std::string& sentence(std::size_t i) const { return sentences_[i]; }
  const std::vector<std::size_t>& word_counts() const { return word_counts_; }

  bool operator==(const Document&) const = default;

 private:
  std::vector<std::string> sentences_;
  std::vector<std::size_t> word_counts_;
};

// Reads a UTF-8 file with one sentence per line (LF or CRLF). A trailing
// newline does not produce an empty final sentence.
Document LoadDocument(const std::string& path);
Document ParseDocument(std::string_view text);
void SaveDocument(const Document& doc, const std::string& path);

// Half-open sentence range [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  constexpr std::size_t size() const { return end - start; }
  constexpr bool empty() const { return start == end; }
  constexpr bool contains(std::size_t i) const { return start <= i && i < end; }

  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

// Score carried by null pairs, which have no similarity.
inline constexpr double kNoScore = std::numeric_limits<double>::quiet_NaN();

struct AlignmentPair {
  Span src;
  Span tgt;
  double score = kNoScore;

  bool is_null() const { return src.empty() || tgt.empty(); }

  // Spans compare by value; scores by value with NaN == NaN.
  bool operator==(const AlignmentPair& other) const;
};

struct AlignmentPath {
  std::vector<AlignmentPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  std::size_t null_count() const;

  bool operator==(const AlignmentPath&) const = default;
};

// Null pair for source sentence `i`, placed at target position `tgt_pos`.
AlignmentPair Deletion(std::size_t i, std::size_t tgt_pos);
// Null pair for target sentence `j`, placed at source position `src_pos`.
AlignmentPair Insertion(std::size_t j, std::size_t src_pos);

// Rebuilds a monotone path from an unordered set of pairs. Non-null pairs
// are ordered by source position; within each gap between them, source nulls
// come first, then target nulls, each ascending. Null sides are re-anchored
// at the running cursor, which starts at (src_origin, tgt_origin). Throws
// ContractError if the non-null pairs are not a monotone chain.
AlignmentPath Canonicalize(std::vector<AlignmentPair> pairs,
                           std::size_t src_origin = 0,
                           std::size_t tgt_origin = 0);

struct AlignConfig {
  double min_score = 0.4;
  std::size_t max_merge = 3;
  std::size_t max_words = 80;
  double word_penalty = 0.01;
  std::size_t merge_penalty_free = 3;
  double merge_penalty = 0.01;
  std::size_t max_nodes = 4'000'000;
  std::size_t gc_max_nodes = 40'000'000;
  // Half-width of the diagonal band searched by the greedy delimiter finder.
  std::size_t greedy_band = 5;
  // Worker threads for edge scoring; 0 picks hardware concurrency.
  std::size_t threads = 1;

  // Throws ContractError on out-of-range values.
  void Validate() const;
};

}  // namespace bitalign

#endif  // BITALIGN_CORE_H_
