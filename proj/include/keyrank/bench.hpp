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

#ifndef KEYRANK_BENCH_HPP_
#define KEYRANK_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "keyrank/commands.hpp"
#include "keyrank/types.hpp"

namespace keyrank {

inline constexpr std::size_t kMinBenchRepetitions = 3;

struct DocBench {
  std::string id;
  std::size_t candidates = 0;
  double extract_ms = 0.0;  // medians over repetitions
  double embed_ms = 0.0;
  double score_ms = 0.0;
  double rank_ms = 0.0;
};

struct ScalingPoint {
  std::size_t m = 0;
  double naive_ms = 0.0;  // median per call: score (on-demand) + greedy
  double lazy_ms = 0.0;   // median per call: score (on-demand) + lazy greedy
};

struct ScalingSpec {
  std::vector<std::size_t> sizes = {250, 500, 1000, 2000, 4000};
  std::size_t top_n = 5;
  std::size_t dim = 64;
  double alpha = 0.5;
  std::size_t repetitions = 9;
  // Calls per timed sample are chosen so each sample covers about this many
  // candidates, keeping small sizes above timer resolution.
  std::size_t candidates_per_sample = std::size_t{1} << 18;
  std::uint64_t seed = 7;
};

// Synthetic random unit-vector instances of each size, timed end to end
// from candidate embeddings to selection.
std::vector<ScalingPoint> scaling_series(const ScalingSpec& spec);

double median(std::vector<double> values);

// Per-document stage medians plus the scaling series. Throws ConfigError
// when repetitions < kMinBenchRepetitions.
int cmd_bench(std::span<const Document> docs, const RunOptions& options,
              std::size_t repetitions, std::ostream& out, std::ostream& err);

}  // namespace keyrank

#endif  // KEYRANK_BENCH_HPP_
