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

#include "keyrank/pipeline.hpp"

#include <chrono>
#include <string>
#include <utility>

#include "keyrank/text.hpp"

namespace keyrank {
namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

DocumentRun run_document(const Document& doc, const Embedder& embedder,
                         const PipelineOptions& options) {
  DocumentRun run;
  const RankConfig cfg = validate_config(options.rank);

  auto t0 = Clock::now();
  run.candidates = extract_candidates(doc, cfg.max_phrase_tokens);
  auto t1 = Clock::now();
  run.times.extract_ms = ms_between(t0, t1);

  std::vector<std::string> surfaces;
  surfaces.reserve(run.candidates.size());
  for (const auto& c : run.candidates) surfaces.push_back(c.surface);
  auto vectors = embedder.embed(surfaces);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    run.candidates[i].embedding = std::move(vectors[i]);
  }
  run.doc_embedding = embedder.embed_document(doc);
  auto t2 = Clock::now();
  run.times.embed_ms = ms_between(t1, t2);

  const ScoredInstance inst =
      score_instance(run.candidates, run.doc_embedding, cfg, options.storage);
  auto t3 = Clock::now();
  run.times.score_ms = ms_between(t2, t3);

  run.selection =
      options.lazy
          ? lazy_greedy_rank(inst, run.candidates, cfg.top_n, options.stop)
          : greedy_rank(inst, run.candidates, cfg.top_n, options.stop);
  run.times.rank_ms = ms_between(t3, Clock::now());
  return run;
}

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace keyrank
