// Copyright 2026 The Authors.
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

#ifndef KEYRANK_EMBEDDING_HPP_
#define KEYRANK_EMBEDDING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyrank/types.hpp"

namespace keyrank {

// Rows exactly as a provider produced them, before validation.
struct RawEmbeddings {
  std::size_t dim = 0;
  std::vector<std::vector<double>> rows;
};

// Source of sentence embeddings. Implementations must tolerate concurrent
// embed_raw calls.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::string name() const = 0;
  // Declared output width; 0 means "whatever the backend reports".
  virtual std::size_t native_dim() const = 0;
  virtual RawEmbeddings embed_raw(std::span<const std::string> texts) const = 0;
};

// One L2-normalized vector per text, in order. The zero vector stays zero.
// Throws DimensionMismatchError when the provider returns rows of the wrong
// width or a width other than its declared native_dim, and Error when the
// row count is wrong or an entry is not finite.
std::vector<EmbeddingVector> embed_batch(const EmbeddingProvider& provider,
                                         std::span<const std::string> texts);

// Feature-hashes the character 3-grams of normalize_phrase(text), padded with
// one space on each side, into `dim` signed buckets, then L2-normalizes.
// Empty (or all-whitespace) text gives the zero vector.
EmbeddingVector hash_embed(std::string_view text, std::size_t dim,
                           std::uint64_t seed);

class HashEmbedProvider final : public EmbeddingProvider {
 public:
  HashEmbedProvider(std::size_t dim, std::uint64_t seed);

  std::string name() const override { return "hash"; }
  std::size_t native_dim() const override { return dim_; }
  RawEmbeddings embed_raw(std::span<const std::string> texts) const override;

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

// Seeded dense random projection with entries +-1/sqrt(target_dim). The sign
// matrix is generated once at construction.
class Projector {
 public:
  Projector(std::size_t source_dim, std::size_t target_dim,
            std::uint64_t seed);

  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }

  // Identity when the dimensions agree; otherwise project and re-normalize.
  // The zero vector maps to the zero vector of target_dim.
  EmbeddingVector apply(const EmbeddingVector& v) const;

 private:
  std::size_t source_dim_;
  std::size_t target_dim_;
  std::vector<std::int8_t> signs_;  // target_dim x source_dim, row-major
};

EmbeddingVector project(const EmbeddingVector& v, std::size_t target_dim,
                        std::uint64_t seed);

inline constexpr std::size_t kDocumentChunkTokens = 256;

// Embeds the document in consecutive chunks of at most kDocumentChunkTokens
// tokens, mean-pools the chunk vectors and re-normalizes. A document that
// fits in one chunk is embedded from its full text with a single call.
EmbeddingVector embed_document(const EmbeddingProvider& provider,
                               const Document& doc);

// Texts a document is split into by embed_document.
std::vector<std::string> document_chunks(const Document& doc);

struct ProjectorCache;

// Provider plus projection into the ranking dimension.
class Embedder {
 public:
  Embedder(std::shared_ptr<const EmbeddingProvider> provider,
           std::size_t target_dim, std::uint64_t seed);

  const EmbeddingProvider& provider() const { return *provider_; }
  std::size_t dim() const { return target_dim_; }

  std::vector<EmbeddingVector> embed(std::span<const std::string> texts) const;
  EmbeddingVector embed_document(const Document& doc) const;

 private:
  EmbeddingVector to_target(const EmbeddingVector& v) const;

  std::shared_ptr<const EmbeddingProvider> provider_;
  std::size_t target_dim_;
  std::uint64_t seed_;
  std::shared_ptr<ProjectorCache> projectors_;
};

}  // namespace keyrank

#endif  // KEYRANK_EMBEDDING_HPP_
