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

#include "bitalign/alignment_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>

namespace bitalign {

namespace {

[[noreturn]] void Fail(std::size_t line, const std::string& what) {
  throw FormatError("alignment line " + std::to_string(line) + ": " + what);
}

std::vector<std::size_t> ParseSide(std::string_view side, std::size_t line) {
  std::vector<std::size_t> out;
  if (side.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(side.find(',', pos), side.size());
    const std::string_view tok = side.substr(pos, comma - pos);
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      Fail(line, "bad index '" + std::string(tok) + "'");
    }
    out.push_back(value);
    if (comma == side.size()) break;
    pos = comma + 1;
  }
  return out;
}

void AppendSide(std::string& out, Span span) {
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (i != span.start) out += ',';
    out += std::to_string(i);
  }
}

}  // namespace

std::vector<AlignmentEntry> ParseAlignments(std::string_view text) {
  std::vector<AlignmentEntry> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    AlignmentEntry entry;
    entry.line = line_no;
    const std::size_t tab = line.find('\t');
    if (tab != std::string_view::npos) {
      const std::string_view score = line.substr(tab + 1);
      if (score != "NA") {
        double v = 0.0;
        const auto [ptr, ec] =
            std::from_chars(score.data(), score.data() + score.size(), v);
        if (score.empty() || ec != std::errc() ||
            ptr != score.data() + score.size()) {
          Fail(line_no, "bad score '" + std::string(score) + "'");
        }
        entry.score = v;
      }
      line = line.substr(0, tab);
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) Fail(line_no, "missing ':'");
    entry.src = ParseSide(line.substr(0, colon), line_no);
    entry.tgt = ParseSide(line.substr(colon + 1), line_no);
    if (entry.src.empty() && entry.tgt.empty()) {
      Fail(line_no, "both sides empty");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<AlignmentEntry> LoadAlignments(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  try {
    return ParseAlignments(data);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::vector<AlignmentEntry> ToEntries(const AlignmentPath& path) {
  std::vector<AlignmentEntry> out;
  out.reserve(path.pairs.size());
  for (std::size_t k = 0; k < path.pairs.size(); ++k) {
    const AlignmentPair& p = path.pairs[k];
    AlignmentEntry e;
    for (std::size_t i = p.src.start; i < p.src.end; ++i) e.src.push_back(i);
    for (std::size_t j = p.tgt.start; j < p.tgt.end; ++j) e.tgt.push_back(j);
    if (!std::isnan(p.score)) e.score = p.score;
    e.line = k + 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::string FormatAlignments(const AlignmentPath& path, bool with_scores) {
  std::string out;
  char buf[64];
  for (const auto& p : path.pairs) {
    AppendSide(out, p.src);
    out += ':';
    AppendSide(out, p.tgt);
    if (with_scores) {
      out += '\t';
      if (p.is_null() || std::isnan(p.score)) {
        out += "NA";
      } else {
        std::snprintf(buf, sizeof(buf), "%.6f", p.score);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace bitalign
