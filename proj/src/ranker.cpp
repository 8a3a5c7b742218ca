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

#include "keyrank/ranker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace keyrank {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void check_sizes(const ScoredInstance& inst,
                 std::span<const Candidate> candidates) {
  if (candidates.size() != inst.size()) {
    throw PreconditionError("instance has " + std::to_string(inst.size()) +
                            " candidates but " +
                            std::to_string(candidates.size()) + " were given");
  }
}

// True when (gain_a, a) should be picked over (gain_b, b).
bool better(double gain_a, std::size_t a, double gain_b, std::size_t b,
            std::span<const Candidate> candidates) {
  if (gain_a != gain_b) return gain_a > gain_b;
  return precedes(candidates[a], a, candidates[b], b);
}

void push_item(RankedSelection& out, const ScoredInstance& inst,
               std::span<const Candidate> candidates, std::size_t index,
               double gain) {
  out.items.push_back(
      RankedItem{candidates[index], index, gain, inst.relevance(index)});
}

}  // namespace

bool precedes(const Candidate& a, std::size_t ia, const Candidate& b,
              std::size_t ib) {
  if (a.position != b.position) return a.position < b.position;
  if (a.normalized != b.normalized) return a.normalized < b.normalized;
  return ia < ib;
}

RankedSelection greedy_rank(const ScoredInstance& inst,
                            std::span<const Candidate> candidates,
                            std::size_t top_n, StopRule stop) {
  const auto start = Clock::now();
  check_sizes(inst, candidates);
  const std::size_t m = inst.size();
  RankedSelection out;
  std::vector<bool> taken(m, false);
  // penalty[x] = sum of sim[x][y] over the selection so far, accumulated in
  // selection order (the same order marginal_gain sums in).
  std::vector<double> penalty(m, 0.0);
  std::vector<std::size_t> selected;

  while (selected.size() < std::min(top_n, m)) {
    std::size_t best = m;
    double best_gain = 0.0;
    for (std::size_t x = 0; x < m; ++x) {
      if (taken[x]) continue;
      const double gain = inst.relevance(x) - inst.alpha() * penalty[x];
      if (best == m || better(gain, x, best_gain, best, candidates)) {
        best = x;
        best_gain = gain;
      }
    }
    if (stop == StopRule::kStopOnNegativeGain && best_gain < 0.0) break;
    taken[best] = true;
    selected.push_back(best);
    push_item(out, inst, candidates, best, best_gain);
    for (std::size_t x = 0; x < m; ++x) {
      if (!taken[x]) penalty[x] += inst.similarity(x, best);
    }
  }
  out.objective_value = objective_value(inst, selected);
  out.elapsed_ms = ms_since(start);
  return out;
}

RankedSelection lazy_greedy_rank(const ScoredInstance& inst,
                                 std::span<const Candidate> candidates,
                                 std::size_t top_n, StopRule stop) {
  const auto start = Clock::now();
  check_sizes(inst, candidates);
  if (!inst.clamped()) {
    throw PreconditionError(
        "lazy greedy needs clamped similarities: cached gains are only upper "
        "bounds when every similarity is non-negative");
  }
  const std::size_t m = inst.size();
  // Max-heap on (gain, tie-break): the heap top is the entry `better` ranks
  // first.
  auto lower = [&](const GainEntry& a, const GainEntry& b) {
    return better(b.cached_gain, b.index, a.cached_gain, a.index, candidates);
  };
  std::priority_queue<GainEntry, std::vector<GainEntry>, decltype(lower)> heap(
      lower);
  for (std::size_t x = 0; x < m; ++x) {
    heap.push(GainEntry{x, inst.relevance(x), 0});
  }

  RankedSelection out;
  std::vector<std::size_t> selected;
  while (selected.size() < std::min(top_n, m)) {
    GainEntry top = heap.top();
    heap.pop();
    if (top.stamp != selected.size()) {
      top.cached_gain = marginal_gain(inst, selected, top.index);
      top.stamp = selected.size();
      heap.push(top);
      continue;
    }
    if (stop == StopRule::kStopOnNegativeGain && top.cached_gain < 0.0) break;
    selected.push_back(top.index);
    push_item(out, inst, candidates, top.index, top.cached_gain);
  }
  out.objective_value = objective_value(inst, selected);
  out.elapsed_ms = ms_since(start);
  return out;
}

RankedSelection mmr_rank(const ScoredInstance& inst,
                         std::span<const Candidate> candidates,
                         std::size_t top_n, double lambda) {
  const auto start = Clock::now();
  check_sizes(inst, candidates);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw PreconditionError("MMR lambda must lie in [0, 1]");
  }
  const std::size_t m = inst.size();
  RankedSelection out;
  std::vector<bool> taken(m, false);
  std::vector<double> max_sim(m, 0.0);
  std::vector<std::size_t> selected;

  while (selected.size() < std::min(top_n, m)) {
    std::size_t best = m;
    double best_score = 0.0;
    for (std::size_t x = 0; x < m; ++x) {
      if (taken[x]) continue;
      const double score =
          lambda * inst.relevance(x) - (1.0 - lambda) * max_sim[x];
      if (best == m || better(score, x, best_score, best, candidates)) {
        best = x;
        best_score = score;
      }
    }
    taken[best] = true;
    push_item(out, inst, candidates, best, best_score);
    out.objective_value += best_score;
    for (std::size_t x = 0; x < m; ++x) {
      if (taken[x]) continue;
      const double s = inst.similarity(x, best);
      max_sim[x] = selected.empty() ? s : std::max(max_sim[x], s);
    }
    selected.push_back(best);
  }
  out.elapsed_ms = ms_since(start);
  return out;
}

}  // namespace keyrank
