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

#include "keyrank/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "keyrank/text.hpp"

namespace keyrank {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = 0xCBF29CE484222325ULL ^ splitmix64(seed);
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return splitmix64(h);
}

}  // namespace

std::vector<EmbeddingVector> embed_batch(const EmbeddingProvider& provider,
                                         std::span<const std::string> texts) {
  if (texts.empty()) return {};
  RawEmbeddings raw = provider.embed_raw(texts);
  if (raw.rows.size() != texts.size()) {
    throw Error("provider '" + provider.name() + "' returned " +
                std::to_string(raw.rows.size()) + " embeddings for " +
                std::to_string(texts.size()) + " texts");
  }
  const std::size_t declared = provider.native_dim();
  if (raw.dim == 0 || (declared != 0 && raw.dim != declared)) {
    throw DimensionMismatchError(
        "provider '" + provider.name() + "' returned dim " +
        std::to_string(raw.dim) + ", declared " + std::to_string(declared));
  }
  std::vector<EmbeddingVector> out;
  out.reserve(raw.rows.size());
  for (auto& row : raw.rows) {
    if (row.size() != raw.dim) {
      throw DimensionMismatchError("provider '" + provider.name() +
                                   "' returned a row of width " +
                                   std::to_string(row.size()) + ", expected " +
                                   std::to_string(raw.dim));
    }
    out.push_back(EmbeddingVector(std::move(row)).normalized());
  }
  return out;
}

EmbeddingVector hash_embed(std::string_view text, std::size_t dim,
                           std::uint64_t seed) {
  if (dim == 0) throw PreconditionError("hash_embed: dim must be >= 1");
  const std::string norm = normalize_phrase(text);
  std::vector<double> buckets(dim, 0.0);
  if (norm.empty()) return EmbeddingVector(std::move(buckets));

  const std::string padded = " " + norm + " ";
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    const std::uint64_t h = fnv1a(std::string_view(padded).substr(i, 3), seed);
    const double sign = (h >> 63) != 0 ? -1.0 : 1.0;
    buckets[h % dim] += sign;
  }
  return EmbeddingVector(std::move(buckets)).normalized();
}

HashEmbedProvider::HashEmbedProvider(std::size_t dim, std::uint64_t seed)
    : dim_(dim), seed_(seed) {
  if (dim_ == 0) throw PreconditionError("hash provider: dim must be >= 1");
}

RawEmbeddings HashEmbedProvider::embed_raw(
    std::span<const std::string> texts) const {
  RawEmbeddings out;
  out.dim = dim_;
  out.rows.reserve(texts.size());
  for (const auto& t : texts) {
    const auto v = hash_embed(t, dim_, seed_);
    out.rows.emplace_back(v.values().begin(), v.values().end());
  }
  return out;
}

Projector::Projector(std::size_t source_dim, std::size_t target_dim,
                     std::uint64_t seed)
    : source_dim_(source_dim), target_dim_(target_dim) {
  if (source_dim_ == 0 || target_dim_ == 0) {
    throw PreconditionError("projection dimensions must be >= 1");
  }
  if (source_dim_ == target_dim_) return;
  signs_.resize(source_dim_ * target_dim_);
  std::uint64_t state = seed;
  for (auto& s : signs_) {
    state = splitmix64(state);
    s = (state >> 63) != 0 ? -1 : 1;
  }
}

EmbeddingVector Projector::apply(const EmbeddingVector& v) const {
  if (v.dim() != source_dim_) {
    throw DimensionMismatchError("projector expects dim " +
                                 std::to_string(source_dim_) + ", got " +
                                 std::to_string(v.dim()));
  }
  if (source_dim_ == target_dim_) return v;
  if (v.is_zero()) return EmbeddingVector::zeros(target_dim_);
  const double scale = 1.0 / std::sqrt(static_cast<double>(target_dim_));
  std::vector<double> out(target_dim_, 0.0);
  for (std::size_t r = 0; r < target_dim_; ++r) {
    const std::int8_t* row = signs_.data() + r * source_dim_;
    double acc = 0.0;
    for (std::size_t c = 0; c < source_dim_; ++c) acc += row[c] * v[c];
    out[r] = acc * scale;
  }
  return EmbeddingVector(std::move(out)).normalized();
}

EmbeddingVector project(const EmbeddingVector& v, std::size_t target_dim,
                        std::uint64_t seed) {
  if (v.dim() == target_dim) return v;
  return Projector(v.dim(), target_dim, seed).apply(v);
}

std::vector<std::string> document_chunks(const Document& doc) {
  const auto tokens = tokenize(doc.text);
  if (tokens.size() <= kDocumentChunkTokens) return {doc.text};
  std::vector<std::string> chunks;
  for (std::size_t first = 0; first < tokens.size();
       first += kDocumentChunkTokens) {
    const std::size_t last =
        std::min(tokens.size(), first + kDocumentChunkTokens) - 1;
    const std::size_t begin = tokens[first].offset;
    const std::size_t end = tokens[last].offset + tokens[last].text.size();
    chunks.push_back(doc.text.substr(begin, end - begin));
  }
  return chunks;
}

EmbeddingVector embed_document(const EmbeddingProvider& provider,
                               const Document& doc) {
  const auto chunks = document_chunks(doc);
  auto vectors = embed_batch(provider, chunks);
  if (vectors.size() == 1) return std::move(vectors.front());

  std::vector<double> mean(vectors.front().dim(), 0.0);
  for (const auto& v : vectors) {
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
  }
  const double count = static_cast<double>(vectors.size());
  for (double& m : mean) m /= count;
  return EmbeddingVector(std::move(mean)).normalized();
}

struct ProjectorCache {
  std::mutex mu;
  std::map<std::size_t, std::shared_ptr<const Projector>> by_source_dim;
};

Embedder::Embedder(std::shared_ptr<const EmbeddingProvider> provider,
                   std::size_t target_dim, std::uint64_t seed)
    : provider_(std::move(provider)),
      target_dim_(target_dim),
      seed_(seed),
      projectors_(std::make_shared<ProjectorCache>()) {
  if (!provider_) throw PreconditionError("embedder needs a provider");
  if (target_dim_ == 0) throw PreconditionError("embedder: dim must be >= 1");
}

EmbeddingVector Embedder::to_target(const EmbeddingVector& v) const {
  if (v.dim() == target_dim_) return v;
  std::shared_ptr<const Projector> projector;
  {
    std::lock_guard<std::mutex> lock(projectors_->mu);
    auto& slot = projectors_->by_source_dim[v.dim()];
    if (!slot) slot = std::make_shared<Projector>(v.dim(), target_dim_, seed_);
    projector = slot;
  }
  return projector->apply(v);
}

std::vector<EmbeddingVector> Embedder::embed(
    std::span<const std::string> texts) const {
  auto vectors = embed_batch(*provider_, texts);
  for (auto& v : vectors) v = to_target(v);
  return vectors;
}

EmbeddingVector Embedder::embed_document(const Document& doc) const {
  return to_target(keyrank::embed_document(*provider_, doc));
}

}  // namespace keyrank
