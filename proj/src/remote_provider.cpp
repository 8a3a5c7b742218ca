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

#include "keyrank/remote_provider.hpp"

#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include <httplib.h>
#include <json.hpp>

namespace keyrank {

struct RemoteEmbeddingProvider::Limiter {
  explicit Limiter(std::size_t limit) : available(limit) {}

  void acquire() {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return available > 0; });
    --available;
  }
  void release() {
    {
      std::lock_guard<std::mutex> lock(mu);
      ++available;
    }
    cv.notify_one();
  }

  std::mutex mu;
  std::condition_variable cv;
  std::size_t available;
};

namespace {

// Parsed reply, or the reason it is unusable.
struct Reply {
  std::optional<RawEmbeddings> embeddings;
  std::string problem;
};

Reply parse_reply(const std::string& body, std::size_t expected_rows) {
  Reply reply;
  const auto json = nlohmann::json::parse(body, nullptr, false);
  if (json.is_discarded() || !json.is_object()) {
    reply.problem = "malformed response body";
    return reply;
  }
  const auto emb = json.find("embeddings");
  const auto dim = json.find("dim");
  if (emb == json.end() || !emb->is_array() || dim == json.end() ||
      !dim->is_number_unsigned()) {
    reply.problem = "response lacks 'embeddings' array or 'dim'";
    return reply;
  }
  if (emb->size() != expected_rows) {
    reply.problem = "response has " + std::to_string(emb->size()) +
                    " embeddings, expected " + std::to_string(expected_rows);
    return reply;
  }
  RawEmbeddings raw;
  raw.dim = dim->get<std::size_t>();
  raw.rows.reserve(emb->size());
  for (const auto& row : *emb) {
    if (!row.is_array()) {
      reply.problem = "embedding row is not an array";
      return reply;
    }
    std::vector<double> values;
    values.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number()) {
        reply.problem = "embedding entry is not a number";
        return reply;
      }
      values.push_back(v.get<double>());
    }
    raw.rows.push_back(std::move(values));
  }
  reply.embeddings = std::move(raw);
  return reply;
}

}  // namespace

RemoteEmbeddingProvider::RemoteEmbeddingProvider(std::string endpoint,
                                                 std::size_t native_dim,
                                                 RemoteOptions options)
    : endpoint_(std::move(endpoint)),
      native_dim_(native_dim),
      options_(options),
      limiter_(std::make_unique<Limiter>(
          options.max_in_flight == 0 ? 1 : options.max_in_flight)) {
  if (endpoint_.empty()) {
    throw ConfigError("remote provider needs an endpoint URL");
  }
  if (options_.max_attempts < 1) {
    throw ConfigError("remote provider needs at least one attempt");
  }
  std::string rest = endpoint_;
  std::size_t host_start = 0;
  if (const auto scheme = rest.find("://"); scheme != std::string::npos) {
    host_start = scheme + 3;
  }
  const auto slash = rest.find('/', host_start);
  host_ = rest.substr(0, slash);
  std::string prefix = slash == std::string::npos ? "" : rest.substr(slash);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  path_ = prefix + "/embed";
}

RemoteEmbeddingProvider::~RemoteEmbeddingProvider() = default;

RawEmbeddings RemoteEmbeddingProvider::embed_raw(
    std::span<const std::string> texts) const {
  const std::string body =
      nlohmann::json{{"texts", std::vector<std::string>(texts.begin(),
                                                        texts.end())}}
          .dump();

  std::string last_problem;
  auto delay = options_.backoff_base;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    std::optional<RawEmbeddings> result;
    limiter_->acquire();
    try {
      httplib::Client client(host_);
      client.set_connection_timeout(options_.timeout);
      client.set_read_timeout(options_.timeout);
      client.set_write_timeout(options_.timeout);
      const auto res = client.Post(path_, body, "application/json");
      if (!res) {
        last_problem = "transport failure: " + httplib::to_string(res.error());
      } else if (res->status != 200) {
        last_problem = "HTTP status " + std::to_string(res->status);
      } else {
        Reply reply = parse_reply(res->body, texts.size());
        if (reply.embeddings) {
          result = std::move(reply.embeddings);
        } else {
          last_problem = reply.problem;
        }
      }
    } catch (const std::exception& e) {
      last_problem = e.what();
    }
    limiter_->release();

    if (result) {
      if (native_dim_ != 0 && result->dim != native_dim_) {
        throw DimensionMismatchError(
            "embedding service at " + endpoint_ + " returned dim " +
            std::to_string(result->dim) + ", expected " +
            std::to_string(native_dim_));
      }
      for (const auto& row : result->rows) {
        if (row.size() != result->dim) {
          throw DimensionMismatchError(
              "embedding service at " + endpoint_ + " returned a row of width " +
              std::to_string(row.size()) + " with dim " +
              std::to_string(result->dim));
        }
      }
      return std::move(*result);
    }
    if (attempt < options_.max_attempts) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
  }
  throw TransportError("embedding service at " + endpoint_ + " failed after " +
                           std::to_string(options_.max_attempts) +
                           " attempts: " + last_problem,
                       options_.max_attempts);
}

}  // namespace keyrank
