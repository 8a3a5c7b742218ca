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

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "keyrank/ranker.hpp"
#include "test_support.hpp"

namespace keyrank {
namespace {

using testing::RawInstance;
using testing::all_subsets;
using testing::positional_candidates;
using testing::random_instance;
using testing::ref_difference;
using testing::ref_greedy;
using testing::ref_objective;

std::vector<Candidate> named(std::initializer_list<const char*> names) {
  std::vector<Candidate> out;
  std::size_t pos = 0;
  for (const char* n : names) {
    Candidate c;
    c.surface = n;
    c.normalized = n;
    c.position = pos++;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> surfaces(const RankedSelection& sel) {
  std::vector<std::string> out;
  for (const auto& item : sel.items) out.push_back(item.candidate.surface);
  return out;
}

// a and b are near duplicates; c is less relevant but distinct.
RawInstance flip_fixture(double alpha) {
  RawInstance raw;
  raw.relevance = {0.9, 0.85, 0.6};
  raw.sim = {1.0, 0.95, 0.0,  //
             0.95, 1.0, 0.0,  //
             0.0, 0.0, 1.0};
  raw.alpha = alpha;
  raw.clamped = true;
  return raw;
}

TEST(Greedy, AlphaZeroTakesMostRelevant) {
  const auto cands = named({"a", "b", "c"});
  const auto sel = greedy_rank(flip_fixture(0.0).scored(), cands, 2);
  EXPECT_EQ(surfaces(sel), (std::vector<std::string>{"a", "b"}));
  EXPECT_NEAR(sel.objective_value, 1.75, 1e-12);
}

TEST(Greedy, RedundancyPenaltyFlipsSecondPick) {
  const RawInstance raw = flip_fixture(0.5);
  const auto cands = named({"a", "b", "c"});
  const auto sel = greedy_rank(raw.scored(), cands, 2);
  EXPECT_EQ(surfaces(sel), (std::vector<std::string>{"a", "c"}));
  EXPECT_NEAR(sel.items[0].marginal_gain, 0.9, 1e-12);
  EXPECT_NEAR(sel.items[1].marginal_gain, 0.6, 1e-12);
  EXPECT_NEAR(sel.objective_value, 1.5, 1e-12);

  // {a, c} is also the exact optimum over all pairs.
  double best = -1e9;
  std::vector<std::size_t> arg;
  for (const auto& s : all_subsets(3, 2)) {
    const double v = ref_objective(raw, s);
    if (v > best) {
      best = v;
      arg = s;
    }
  }
  EXPECT_EQ(arg, (std::vector<std::size_t>{0, 2}));
  EXPECT_NEAR(best, sel.objective_value, 1e-12);
}

TEST(Greedy, TiesGoToEarlierPosition) {
  RawInstance raw;
  raw.relevance = {0.5, 0.5, 0.5};
  raw.sim.assign(9, 0.0);
  raw.alpha = 0.5;
  auto cands = named({"x", "y", "z"});
  cands[0].position = 7;
  cands[1].position = 2;
  cands[2].position = 4;
  const auto sel = greedy_rank(raw.scored(), cands, 3);
  EXPECT_EQ(surfaces(sel), (std::vector<std::string>{"y", "z", "x"}));
  const auto lazy = lazy_greedy_rank(raw.scored(), cands, 3);
  EXPECT_EQ(surfaces(lazy), surfaces(sel));
}

TEST(Greedy, TiesAtSamePositionUseNormalizedForm) {
  RawInstance raw;
  raw.relevance = {0.5, 0.5};
  raw.sim.assign(4, 0.0);
  auto cands = named({"beta", "alpha"});
  cands[1].position = 0;
  const auto sel = greedy_rank(raw.scored(), cands, 1);
  EXPECT_EQ(surfaces(sel), (std::vector<std::string>{"alpha"}));
}

TEST(Greedy, CardinalityAndEmptyInput) {
  std::mt19937_64 rng(5);
  const RawInstance raw = random_instance(rng, 4, 6, 0.5, true);
  const auto cands = positional_candidates(4);
  EXPECT_EQ(greedy_rank(raw.scored(), cands, 10).items.size(), 4u);
  EXPECT_EQ(greedy_rank(raw.scored(), cands, 0).items.size(), 0u);
  const auto empty = ScoredInstance::from_matrix({}, {}, 0.5, true);
  const auto sel = greedy_rank(empty, {}, 5);
  EXPECT_TRUE(sel.items.empty());
  EXPECT_EQ(sel.objective_value, 0.0);
  EXPECT_TRUE(lazy_greedy_rank(empty, {}, 5).items.empty());
}

TEST(Greedy, RejectsCandidateCountMismatch) {
  const auto cands = named({"a", "b"});
  EXPECT_THROW(greedy_rank(flip_fixture(0.5).scored(), cands, 2),
               PreconditionError);
}

// Every step's recorded gain equals the brute-force difference and the
// sequence matches the straight-line reference.
TEST(Greedy, MatchesBruteForceReference) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> alpha(0.0, 1.5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng() % 12;
    const std::size_t n = 1 + rng() % 5;
    const RawInstance raw = random_instance(rng, m, 8, alpha(rng), true);
    const auto cands = positional_candidates(m);
    const auto sel = greedy_rank(raw.scored(), cands, n);
    EXPECT_EQ(sel.indices(), ref_greedy(raw, n));
    std::vector<std::size_t> prefix;
    for (const auto& item : sel.items) {
      EXPECT_NEAR(item.marginal_gain, ref_difference(raw, prefix, item.index),
                  1e-12);
      EXPECT_EQ(item.relevance, raw.relevance[item.index]);
      prefix.push_back(item.index);
    }
    EXPECT_NEAR(sel.objective_value, ref_objective(raw, prefix), 1e-12);
  }
}

TEST(Greedy, GainsTelescopeToObjective) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const RawInstance raw = random_instance(rng, 15, 8, 0.9, t % 2 == 0);
    const auto sel = greedy_rank(raw.scored(), positional_candidates(15), 6);
    double sum = 0.0;
    for (const auto& item : sel.items) sum += item.marginal_gain;
    EXPECT_NEAR(sum, sel.objective_value, 1e-12);
  }
}

TEST(Greedy, SmallerBudgetIsPrefix) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const RawInstance raw = random_instance(rng, 12, 8, 0.6, true);
    const auto cands = positional_candidates(12);
    const auto full = greedy_rank(raw.scored(), cands, 8).indices();
    for (std::size_t k = 0; k <= 8; ++k) {
      const auto part = greedy_rank(raw.scored(), cands, k).indices();
      EXPECT_TRUE(std::equal(part.begin(), part.end(), full.begin()));
    }
  }
}

// Permuting the candidate list (with positions travelling along) selects the
// same candidates in the same order.
TEST(Greedy, StableUnderInputPermutation) {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 10;
    const RawInstance raw = random_instance(rng, m, 8, 0.7, true);
    const auto cands = positional_candidates(m);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RawInstance shuffled = raw;
    std::vector<Candidate> shuffled_cands(m);
    for (std::size_t i = 0; i < m; ++i) {
      shuffled.relevance[i] = raw.relevance[perm[i]];
      shuffled_cands[i] = cands[perm[i]];
      for (std::size_t j = 0; j < m; ++j) {
        shuffled.sim[i * m + j] = raw.s(perm[i], perm[j]);
      }
    }
    EXPECT_EQ(surfaces(greedy_rank(raw.scored(), cands, 5)),
              surfaces(greedy_rank(shuffled.scored(), shuffled_cands, 5)));
    EXPECT_EQ(surfaces(lazy_greedy_rank(raw.scored(), cands, 5)),
              surfaces(lazy_greedy_rank(shuffled.scored(), shuffled_cands, 5)));
  }
}

TEST(LazyGreedy, IdenticalToNaive) {
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> alpha(0.0, 2.0);
  for (int t = 0; t < 400; ++t) {
    const std::size_t m = 1 + rng() % 30;
    const std::size_t n = rng() % 8;
    const RawInstance raw = random_instance(rng, m, 8, alpha(rng), true);
    const auto cands = positional_candidates(m);
    const auto naive = greedy_rank(raw.scored(), cands, n);
    const auto lazy = lazy_greedy_rank(raw.scored(), cands, n);
    ASSERT_EQ(naive.indices(), lazy.indices());
    for (std::size_t k = 0; k < naive.items.size(); ++k) {
      EXPECT_EQ(naive.items[k].marginal_gain, lazy.items[k].marginal_gain);
    }
    EXPECT_EQ(naive.objective_value, lazy.objective_value);
  }
}

TEST(LazyGreedy, SingleCandidate) {
  const auto inst = ScoredInstance::from_matrix({0.3}, {1.0}, 0.5, true);
  const auto cands = positional_candidates(1);
  const auto sel = lazy_greedy_rank(inst, cands, 5);
  ASSERT_EQ(sel.items.size(), 1u);
  EXPECT_EQ(sel.items[0].marginal_gain, 0.3);
}

TEST(LazyGreedy, FlipFixture) {
  const auto cands = named({"a", "b", "c"});
  EXPECT_EQ(surfaces(lazy_greedy_rank(flip_fixture(0.5).scored(), cands, 2)),
            (std::vector<std::string>{"a", "c"}));
}

TEST(LazyGreedy, RejectsUnclampedInstance) {
  const auto inst = ScoredInstance::from_matrix({0.3, 0.2}, {1, -0.2, -0.2, 1},
                                                0.5, false);
  EXPECT_THROW(lazy_greedy_rank(inst, positional_candidates(2), 2),
               PreconditionError);
  EXPECT_NO_THROW(greedy_rank(inst, positional_candidates(2), 2));
}

TEST(StopRule, StopsBeforeNegativeGain) {
  RawInstance raw;
  raw.relevance = {0.5, 0.4, -0.2};
  raw.sim = {1, 0.9, 0, 0.9, 1, 0, 0, 0, 1};
  raw.alpha = 1.0;
  const auto cands = named({"a", "b", "c"});
  const auto fixed = greedy_rank(raw.scored(), cands, 3);
  EXPECT_EQ(fixed.items.size(), 3u);
  const auto stopped =
      greedy_rank(raw.scored(), cands, 3, StopRule::kStopOnNegativeGain);
  EXPECT_EQ(surfaces(stopped), (std::vector<std::string>{"a"}));
  const auto lazy =
      lazy_greedy_rank(raw.scored(), cands, 3, StopRule::kStopOnNegativeGain);
  EXPECT_EQ(surfaces(lazy), surfaces(stopped));
}

TEST(Mmr, LambdaOneIsPureRelevance) {
  const auto cands = named({"a", "b", "c"});
  const auto sel = mmr_rank(flip_fixture(0.5).scored(), cands, 2, 1.0);
  EXPECT_EQ(surfaces(sel), (std::vector<std::string>{"a", "b"}));
  EXPECT_NEAR(sel.objective_value, 1.75, 1e-12);
}

TEST(Mmr, BalancedLambdaAvoidsNearDuplicate) {
  const auto cands = named({"a", "b", "c"});
  const auto sel = mmr_rank(flip_fixture(0.5).scored(), cands, 2, 0.5);
  EXPECT_EQ(surfaces(sel), (std::vector<std::string>{"a", "c"}));
  // 0.5*0.9 then 0.5*0.6 - 0.5*0
  EXPECT_NEAR(sel.items[0].marginal_gain, 0.45, 1e-12);
  EXPECT_NEAR(sel.items[1].marginal_gain, 0.30, 1e-12);
  EXPECT_NEAR(sel.objective_value, 0.75, 1e-12);
}

TEST(Mmr, RejectsLambdaOutsideUnitInterval) {
  const auto cands = named({"a", "b", "c"});
  EXPECT_THROW(mmr_rank(flip_fixture(0.5).scored(), cands, 2, -0.1),
               PreconditionError);
  EXPECT_THROW(mmr_rank(flip_fixture(0.5).scored(), cands, 2, 1.5),
               PreconditionError);
}

}  // namespace
}  // namespace keyrank
