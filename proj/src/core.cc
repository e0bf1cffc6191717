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

#include "bitalign/core.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

namespace bitalign {

namespace {

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' ||
         c == '\r';
}

}  // namespace

std::size_t CountWords(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (unsigned char c : text) {
    if (IsSpace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

std::size_t CountCodePoints(std::string_view text) {
  return std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  });
}

std::size_t FindInvalidUtf8(std::string_view text) {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = s[i];
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    std::uint32_t cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    // Overlong forms, surrogates, and values past U+10FFFF.
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

Document::Document(std::vector<std::string> sentences)
    : sentences_(std::move(sentences)) {
  word_counts_.reserve(sentences_.size());
  for (const auto& s : sentences_) word_counts_.push_back(CountWords(s));
}

Document ParseDocument(std::string_view text) {
  const std::size_t bad = FindInvalidUtf8(text);
  if (bad != std::string_view::npos) {
    throw FormatError("invalid UTF-8 at byte offset " + std::to_string(bad));
  }
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    pos = nl + 1;
  }
  return Document(std::move(lines));
}

Document LoadDocument(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path);
  try {
    return ParseDocument(data);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void SaveDocument(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (const auto& s : doc.sentences()) out << s << '\n';
  if (!out) throw IoError("write failed: " + path);
}

bool AlignmentPair::operator==(const AlignmentPair& other) const {
  if (src != other.src || tgt != other.tgt) return false;
  if (std::isnan(score) || std::isnan(other.score)) {
    return std::isnan(score) && std::isnan(other.score);
  }
  return score == other.score;
}

std::size_t AlignmentPath::null_count() const {
  return std::count_if(pairs.begin(), pairs.end(),
                       [](const AlignmentPair& p) { return p.is_null(); });
}

AlignmentPair Deletion(std::size_t i, std::size_t tgt_pos) {
  return {{i, i + 1}, {tgt_pos, tgt_pos}, kNoScore};
}

AlignmentPair Insertion(std::size_t j, std::size_t src_pos) {
  return {{src_pos, src_pos}, {j, j + 1}, kNoScore};
}

AlignmentPath Canonicalize(std::vector<AlignmentPair> pairs,
                           std::size_t src_origin, std::size_t tgt_origin) {
  std::vector<AlignmentPair> aligned;
  std::vector<std::size_t> src_nulls;
  std::vector<std::size_t> tgt_nulls;
  for (const auto& p : pairs) {
    if (!p.is_null()) {
      aligned.push_back(p);
      continue;
    }
    for (std::size_t i = p.src.start; i < p.src.end; ++i) src_nulls.push_back(i);
    for (std::size_t j = p.tgt.start; j < p.tgt.end; ++j) tgt_nulls.push_back(j);
  }
  std::sort(aligned.begin(), aligned.end(),
            [](const AlignmentPair& a, const AlignmentPair& b) {
              return a.src.start < b.src.start;
            });
  std::sort(src_nulls.begin(), src_nulls.end());
  std::sort(tgt_nulls.begin(), tgt_nulls.end());

  AlignmentPath out;
  out.pairs.reserve(aligned.size() + src_nulls.size() + tgt_nulls.size());
  std::size_t si = 0, ti = 0;
  std::size_t src_cursor = src_origin, tgt_cursor = tgt_origin;
  auto flush = [&](std::size_t src_limit, std::size_t tgt_limit) {
    while (si < src_nulls.size() && src_nulls[si] < src_limit) {
      out.pairs.push_back(Deletion(src_nulls[si], tgt_cursor));
      src_cursor = src_nulls[si] + 1;
      ++si;
    }
    while (ti < tgt_nulls.size() && tgt_nulls[ti] < tgt_limit) {
      out.pairs.push_back(Insertion(tgt_nulls[ti], src_cursor));
      tgt_cursor = tgt_nulls[ti] + 1;
      ++ti;
    }
  };
  std::size_t last_tgt = tgt_origin;
  for (const auto& p : aligned) {
    if (p.tgt.start < last_tgt) {
      throw ContractError("non-monotone pairs cannot be canonicalized");
    }
    last_tgt = p.tgt.end;
    flush(p.src.start, p.tgt.start);
    out.pairs.push_back(p);
    src_cursor = p.src.end;
    tgt_cursor = p.tgt.end;
  }
  flush(std::numeric_limits<std::size_t>::max(),
        std::numeric_limits<std::size_t>::max());
  return out;
}

void AlignConfig::Validate() const {
  // Values above 1 are accepted: they make every non-null edge unreachable.
  if (!(min_score >= 0.0)) throw ContractError("min_score must be >= 0");
  if (max_merge < 1 || max_merge > 255) {
    throw ContractError("max_merge must be in [1, 255]");
  }
  if (max_words < 1) throw ContractError("max_words must be positive");
  if (!(word_penalty >= 0.0) || !(merge_penalty >= 0.0)) {
    throw ContractError("penalties must be non-negative");
  }
  if (max_nodes < 1 || gc_max_nodes < 1) {
    throw ContractError("node budgets must be positive");
  }
}

}  // namespace bitalign
