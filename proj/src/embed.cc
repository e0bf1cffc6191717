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

#include "bitalign/embed.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <mutex>

namespace bitalign {

namespace {

std::uint32_t ReadU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void AppendU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back((v >> (8 * k)) & 0xFF);
}

// Normalizes `row` in place; returns false for a zero (or non-finite) row.
bool NormalizeRow(std::span<float> row) {
  double sq = 0.0;
  for (float x : row) sq += static_cast<double>(x) * static_cast<double>(x);
  const double norm = std::sqrt(sq);
  if (!(norm > 0.0) || !std::isfinite(norm)) return false;
  for (float& x : row) x = static_cast<float>(static_cast<double>(x) / norm);
  return true;
}

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(std::size_t dim, std::vector<float> values)
    : dim_(dim), values_(std::move(values)) {
  if (dim_ == 0) throw ContractError("embedding dim must be positive");
  if (values_.size() % dim_ != 0) {
    throw ContractError("embedding values are not a multiple of dim");
  }
  for (std::size_t i = 0; i < count(); ++i) {
    if (!NormalizeRow({values_.data() + i * dim_, dim_})) {
      throw ContractError("embedding row " + std::to_string(i) +
                          " is zero and cannot be normalized");
    }
  }
}

EmbeddingMatrix ReadEmbeddings(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 16) throw FormatError("embedding file truncated header");
  if (std::memcmp(bytes.data(), kEmbeddingMagic, 4) != 0) {
    throw FormatError("bad embedding magic (expected SAEV)");
  }
  const std::uint32_t version = ReadU32(bytes.data() + 4);
  if (version != kEmbeddingVersion) {
    throw FormatError("unsupported embedding version " +
                      std::to_string(version));
  }
  const std::uint64_t count = ReadU32(bytes.data() + 8);
  const std::uint64_t dim = ReadU32(bytes.data() + 12);
  if (dim == 0) throw FormatError("embedding dim is zero");
  const std::uint64_t payload = count * dim * 4;
  if (bytes.size() - 16 != payload) {
    throw FormatError("embedding payload is " +
                      std::to_string(bytes.size() - 16) + " bytes, expected " +
                      std::to_string(payload));
  }
  std::vector<float> values(count * dim);
  const std::uint8_t* p = bytes.data() + 16;
  for (std::size_t k = 0; k < values.size(); ++k, p += 4) {
    values[k] = std::bit_cast<float>(ReadU32(p));
  }
  try {
    return EmbeddingMatrix(dim, std::move(values));
  } catch (const ContractError& e) {
    throw FormatError(e.what());
  }
}

EmbeddingMatrix LoadEmbeddings(const std::string& path,
                               std::size_t expected_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  EmbeddingMatrix m;
  try {
    m = ReadEmbeddings(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
  if (m.count() != expected_count) {
    throw FormatError(path + ": holds " + std::to_string(m.count()) +
                      " vectors but the sentence file has " +
                      std::to_string(expected_count) + " lines");
  }
  return m;
}

std::vector<std::uint8_t> SerializeEmbeddings(const EmbeddingMatrix& matrix) {
  std::vector<std::uint8_t> out(kEmbeddingMagic, kEmbeddingMagic + 4);
  out.reserve(16 + matrix.values().size() * 4);
  AppendU32(out, kEmbeddingVersion);
  AppendU32(out, static_cast<std::uint32_t>(matrix.count()));
  AppendU32(out, static_cast<std::uint32_t>(matrix.dim()));
  for (float x : matrix.values()) AppendU32(out, std::bit_cast<std::uint32_t>(x));
  return out;
}

void SaveEmbeddings(const EmbeddingMatrix& matrix, const std::string& path) {
  const auto bytes = SerializeEmbeddings(matrix);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

EmbeddingMatrix HashNgramEmbed(const Document& doc, std::size_t dim) {
  if (dim < 16) throw ContractError("hash embedding dim must be >= 16");
  std::vector<float> values(doc.size() * dim, 0.0f);
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string text = doc.sentence(i);
    std::transform(text.begin(), text.end(), text.begin(), [](char c) {
      return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    });
    starts.clear();
    for (std::size_t k = 0; k < text.size(); ++k) {
      if ((static_cast<unsigned char>(text[k]) & 0xC0) != 0x80) {
        starts.push_back(k);
      }
    }
    float* row = values.data() + i * dim;
    if (starts.size() < 3) {
      row[Fnv1a64(text) % dim] = 1.0f;
      continue;
    }
    starts.push_back(text.size());
    for (std::size_t k = 0; k + 3 < starts.size(); ++k) {
      const std::string_view gram(text.data() + starts[k],
                                  starts[k + 3] - starts[k]);
      row[Fnv1a64(gram) % dim] += 1.0f;
    }
  }
  return EmbeddingMatrix(dim, std::move(values));
}

Vector MakeSpanVector(const EmbeddingMatrix& matrix, Span span) {
  if (span.empty() || span.end > matrix.count()) {
    throw ContractError("span [" + std::to_string(span.start) + "," +
                        std::to_string(span.end) + ") invalid for " +
                        std::to_string(matrix.count()) + " vectors");
  }
  const std::size_t dim = matrix.dim();
  Vector acc(matrix.row(span.start).begin(), matrix.row(span.start).end());
  if (span.size() == 1) return acc;
  for (std::size_t i = span.start + 1; i < span.end; ++i) {
    const auto row = matrix.row(i);
    for (std::size_t d = 0; d < dim; ++d) acc[d] += static_cast<double>(row[d]);
  }
  double sq = 0.0;
  for (double x : acc) sq += x * x;
  const double norm = std::sqrt(sq);
  // Antipodal rows can cancel; such a span carries no direction.
  if (norm == 0.0) return Vector(dim, 0.0);
  for (double& x : acc) x /= norm;
  return acc;
}

double Similarity(std::span<const double> u, std::span<const double> v) {
  double dot = 0.0;
  const std::size_t n = u.size();
  for (std::size_t d = 0; d < n; ++d) dot += u[d] * v[d];
  return std::clamp(dot, -1.0, 1.0);
}

const Vector& SpanVectorCache::Get(Span span) {
  {
    std::shared_lock lock(mu_);
    auto it = vectors_.find(span);
    if (it != vectors_.end()) return it->second;
  }
  Vector v = MakeSpanVector(*matrix_, span);
  std::unique_lock lock(mu_);
  return vectors_.try_emplace(span, std::move(v)).first->second;
}

std::size_t SpanVectorCache::size() const {
  std::shared_lock lock(mu_);
  return vectors_.size();
}

double SpanSimilarity(SpanVectorCache& src, Span src_span,
                      SpanVectorCache& tgt, Span tgt_span) {
  return Similarity(src.Get(src_span), tgt.Get(tgt_span));
}

}  // namespace bitalign
