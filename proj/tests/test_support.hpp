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

#ifndef KEYRANK_TESTS_TEST_SUPPORT_HPP_
#define KEYRANK_TESTS_TEST_SUPPORT_HPP_

// Reference implementations used as oracles. Nothing here calls into the
// objective or ranker code it is used to check.

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "keyrank/objective.hpp"
#include "keyrank/types.hpp"

namespace keyrank::testing {

struct RawInstance {
  std::vector<double> relevance;
  std::vector<double> sim;  // M*M row-major, symmetric
  double alpha = 0.0;
  bool clamped = true;

  std::size_t size() const { return relevance.size(); }
  double s(std::size_t i, std::size_t j) const {
    return sim[i * relevance.size() + j];
  }
  ScoredInstance scored() const {
    return ScoredInstance::from_matrix(relevance, sim, alpha, clamped);
  }
};

inline double ref_cosine(const std::vector<double>& a,
                         const std::vector<double>& b) {
  long double dot = 0, na = 0, nb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dot += static_cast<long double>(a[k]) * b[k];
    na += static_cast<long double>(a[k]) * a[k];
    nb += static_cast<long double>(b[k]) * b[k];
  }
  if (na == 0 || nb == 0) return 0.0;
  const double c = static_cast<double>(dot / std::sqrt(na * nb));
  return std::fmax(-1.0, std::fmin(1.0, c));
}

inline std::vector<double> random_vector(std::mt19937_64& rng,
                                         std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  for (double& x : v) x = gauss(rng);
  return v;
}

// Random cosine instance: M candidate vectors and a document vector in
// `dim` dimensions.
inline RawInstance random_instance(std::mt19937_64& rng, std::size_t m,
                                   std::size_t dim, double alpha,
                                   bool clamped) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < m; ++i) rows.push_back(random_vector(rng, dim));
  const auto doc = random_vector(rng, dim);
  RawInstance inst;
  inst.alpha = alpha;
  inst.clamped = clamped;
  inst.sim.assign(m * m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    inst.relevance.push_back(ref_cosine(rows[i], doc));
    for (std::size_t j = i + 1; j < m; ++j) {
      double c = ref_cosine(rows[i], rows[j]);
      if (clamped) c = std::fmax(0.0, c);
      inst.sim[i * m + j] = c;
      inst.sim[j * m + i] = c;
    }
  }
  return inst;
}

// f(S) straight from the definition, pairs i<j in S.
inline double ref_objective(const RawInstance& inst,
                            const std::vector<std::size_t>& subset) {
  double total = 0.0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    total += inst.relevance[subset[a]];
  }
  double penalty = 0.0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      penalty += inst.s(subset[a], subset[b]);
    }
  }
  return total - inst.alpha * penalty;
}

inline double ref_difference(const RawInstance& inst,
                             std::vector<std::size_t> subset, std::size_t x) {
  const double before = ref_objective(inst, subset);
  subset.push_back(x);
  return ref_objective(inst, subset) - before;
}

// Candidates at positions 0..M-1 with names c000, c001, ...
inline std::vector<Candidate> positional_candidates(std::size_t m) {
  std::vector<Candidate> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string name = std::to_string(i);
    name = "c" + std::string(3 - std::min<std::size_t>(3, name.size()), '0') +
           name;
    out[i].surface = name;
    out[i].normalized = name;
    out[i].position = i;
  }
  return out;
}

// Straight-line greedy: at every step evaluate f(S + x) - f(S) for every
// remaining x by brute force and keep the largest (first position wins ties
// since candidates are in position order).
inline std::vector<std::size_t> ref_greedy(const RawInstance& inst,
                                           std::size_t top_n) {
  std::vector<std::size_t> selected;
  std::vector<bool> taken(inst.size(), false);
  while (selected.size() < std::min(top_n, inst.size())) {
    std::size_t best = inst.size();
    double best_gain = 0.0;
    for (std::size_t x = 0; x < inst.size(); ++x) {
      if (taken[x]) continue;
      const double g = ref_difference(inst, selected, x);
      if (best == inst.size() || g > best_gain) {
        best = x;
        best_gain = g;
      }
    }
    taken[best] = true;
    selected.push_back(best);
  }
  return selected;
}

// All k-subsets of {0..m-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> all_subsets(std::size_t m,
                                                         std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace keyrank::testing

#endif  // KEYRANK_TESTS_TEST_SUPPORT_HPP_
