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

#ifndef KEYRANK_PIPELINE_HPP_
#define KEYRANK_PIPELINE_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "keyrank/config.hpp"
#include "keyrank/embedding.hpp"
#include "keyrank/objective.hpp"
#include "keyrank/ranker.hpp"
#include "keyrank/types.hpp"

namespace keyrank {

struct PipelineOptions {
  RankConfig rank;
  bool lazy = false;
  StopRule stop = StopRule::kFixedCardinality;
  SimilarityStorage storage = SimilarityStorage::kDense;
};

struct StageTimes {
  double extract_ms = 0.0;
  double embed_ms = 0.0;
  double score_ms = 0.0;
  double rank_ms = 0.0;

  double total_ms() const { return extract_ms + embed_ms + score_ms + rank_ms; }
};

struct DocumentRun {
  std::vector<Candidate> candidates;  // every extracted candidate, embedded
  EmbeddingVector doc_embedding;
  RankedSelection selection;
  StageTimes times;
};

// extract -> embed -> score -> greedy (or lazy greedy) for one document.
DocumentRun run_document(const Document& doc, const Embedder& embedder,
                         const PipelineOptions& options);

std::size_t resolve_workers(std::size_t requested);

// Calls fn(i) for every i in [0, n) on up to `workers` threads. Results are
// the caller's business (write into slot i). The first exception thrown by
// any call is rethrown after all threads finish.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace keyrank

#endif  // KEYRANK_PIPELINE_HPP_
