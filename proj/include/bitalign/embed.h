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

#ifndef BITALIGN_EMBED_H_
#define BITALIGN_EMBED_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "bitalign/core.h"

namespace bitalign {

// Unit vector in double precision. Span vectors and similarities are always
// computed in double from the float32 rows.
using Vector = std::vector<double>;

// Row-major float32 sentence vectors; row i belongs to sentence i.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;

  // Every row is L2-normalized. Throws ContractError on a zero row or a
  // size mismatch.
  EmbeddingMatrix(std::size_t dim, std::vector<float> values);

  std::size_t dim() const { return dim_; }
  std::size_t count() const { return dim_ == 0 ? 0 : values_.size() / dim_; }

  std::span<const float> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  const std::vector<float>& values() const { return values_; }

 private:
  std::size_t dim_ = 0;
  std::vector<float> values_;
};

// SAEV v1: "SAEV", u32 version, u32 count, u32 dim, count*dim float32; all
// little-endian.
inline constexpr char kEmbeddingMagic[4] = {'S', 'A', 'E', 'V'};
inline constexpr std::uint32_t kEmbeddingVersion = 1;

// Loads and renormalizes; throws FormatError on bad magic/version, truncated
// data, a zero row, or count != expected_count.
EmbeddingMatrix LoadEmbeddings(const std::string& path,
                               std::size_t expected_count);
EmbeddingMatrix ReadEmbeddings(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> SerializeEmbeddings(const EmbeddingMatrix& matrix);
void SaveEmbeddings(const EmbeddingMatrix& matrix, const std::string& path);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view bytes);

// Character-trigram hashing embedder. Each sentence is ASCII-lowercased,
// decoded into code points, and every window of three code points (as UTF-8
// bytes) is hashed into one of `dim` buckets. Sentences with fewer than three
// code points get a one-hot vector at the bucket of the whole string.
// Requires dim >= 16.
EmbeddingMatrix HashNgramEmbed(const Document& doc, std::size_t dim);

// Pure span-vector construction: a single row is returned as-is, longer
// spans as the normalized sum of their rows. Summation is in row order and
// then dimension order.
Vector MakeSpanVector(const EmbeddingMatrix& matrix, Span span);

// Dot product in dimension order, clamped to [-1, 1].
double Similarity(std::span<const double> u, std::span<const double> v);

// Memoizes span vectors; safe for concurrent use.
class SpanVectorCache {
 public:
  explicit SpanVectorCache(const EmbeddingMatrix& matrix) : matrix_(&matrix) {}

  const EmbeddingMatrix& matrix() const { return *matrix_; }

  // Throws ContractError on an empty or out-of-range span.
  const Vector& Get(Span span);

  std::size_t size() const;

 private:
  const EmbeddingMatrix* matrix_;
  mutable std::shared_mutex mu_;
  // std::map keeps references stable across inserts.
  std::map<Span, Vector> vectors_;
};

// Convenience: similarity of two spans through their caches.
double SpanSimilarity(SpanVectorCache& src, Span src_span,
                      SpanVectorCache& tgt, Span tgt_span);

}  // namespace bitalign

#endif  // BITALIGN_EMBED_H_
