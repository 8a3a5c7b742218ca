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

#ifndef KEYRANK_REMOTE_PROVIDER_HPP_
#define KEYRANK_REMOTE_PROVIDER_HPP_

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>

#include "keyrank/embedding.hpp"

namespace keyrank {

// Raised once every attempt against the embedding service has failed.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int attempts)
      : Error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

struct RemoteOptions {
  int max_attempts = 3;
  std::chrono::milliseconds backoff_base{100};  // doubled after each failure
  std::size_t max_in_flight = 4;
  std::chrono::milliseconds timeout{30000};
};

// Client for an HTTP embedding sidecar:
//   POST {endpoint}/embed  {"texts": [...]}
//   200 -> {"embeddings": [[...], ...], "dim": D}
// Non-200 replies, transport failures and malformed bodies are retried with
// exponential backoff. A reply whose dim disagrees with `native_dim` (when
// non-zero) or with its own rows is a DimensionMismatchError and is not
// retried.
class RemoteEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit RemoteEmbeddingProvider(std::string endpoint,
                                   std::size_t native_dim = 0,
                                   RemoteOptions options = {});
  ~RemoteEmbeddingProvider() override;

  std::string name() const override { return "remote"; }
  std::size_t native_dim() const override { return native_dim_; }
  RawEmbeddings embed_raw(std::span<const std::string> texts) const override;

  const std::string& endpoint() const { return endpoint_; }

 private:
  struct Limiter;

  std::string endpoint_;
  std::string host_;  // scheme://host[:port]
  std::string path_;  // prefix + "/embed"
  std::size_t native_dim_;
  RemoteOptions options_;
  std::unique_ptr<Limiter> limiter_;
};

}  // namespace keyrank

#endif  // KEYRANK_REMOTE_PROVIDER_HPP_
