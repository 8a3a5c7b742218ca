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

#ifndef KEYRANK_RANKER_HPP_
#define KEYRANK_RANKER_HPP_

#include <cstddef>
#include <span>

#include "keyrank/objective.hpp"
#include "keyrank/types.hpp"

namespace keyrank {

enum class StopRule {
  kFixedCardinality,    // always emit min(top_n, M) items
  kStopOnNegativeGain,  // stop early once the best gain drops below zero
};

// Heap entry of the lazy ranker. `cached_gain` was exact when |S| == stamp
// and is an upper bound afterwards (clamped similarities never raise a
// penalty's negation).
struct GainEntry {
  std::size_t index = 0;
  double cached_gain = 0.0;
  std::size_t stamp = 0;
};

// Tie-break among equal gains: smaller document position, then
// lexicographically smaller normalized form, then smaller list index.
bool precedes(const Candidate& a, std::size_t ia, const Candidate& b,
              std::size_t ib);

// Greedy maximization of f: each step adds the candidate of largest marginal
// gain. Throws PreconditionError when candidates.size() != inst.size().
RankedSelection greedy_rank(const ScoredInstance& inst,
                            std::span<const Candidate> candidates,
                            std::size_t top_n,
                            StopRule stop = StopRule::kFixedCardinality);

// Same output as greedy_rank, using cached upper bounds in a max-heap to skip
// stale re-evaluations. Requires inst.clamped().
RankedSelection lazy_greedy_rank(const ScoredInstance& inst,
                                 std::span<const Candidate> candidates,
                                 std::size_t top_n,
                                 StopRule stop = StopRule::kFixedCardinality);

// Maximal marginal relevance: argmax lambda*rel[x] - (1-lambda)*max_{y in S}
// sim[x][y], with the max over an empty S taken as 0. Item gains are the MMR
// scores and objective_value is their sum. lambda must lie in [0, 1].
RankedSelection mmr_rank(const ScoredInstance& inst,
                         std::span<const Candidate> candidates,
                         std::size_t top_n, double lambda);

}  // namespace keyrank

#endif  // KEYRANK_RANKER_HPP_
