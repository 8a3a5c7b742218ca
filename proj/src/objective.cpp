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

#include "keyrank/objective.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace keyrank {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

// Shared by cosine() and on-demand similarities so both routes agree bit for
// bit.
double cosine_from_parts(double d, double na, double nb) {
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(d / (na * nb), -1.0, 1.0);
}

void check_index(const ScoredInstance& inst, std::size_t i) {
  if (i >= inst.size()) {
    throw PreconditionError("candidate index " + std::to_string(i) +
                            " out of range for " + std::to_string(inst.size()) +
                            " candidates");
  }
}

}  // namespace

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("cosine of vectors with dims " +
                                 std::to_string(a.dim()) + " and " +
                                 std::to_string(b.dim()));
  }
  const auto va = a.values();
  const auto vb = b.values();
  return cosine_from_parts(dot(va.data(), vb.data(), va.size()),
                           std::sqrt(dot(va.data(), va.data(), va.size())),
                           std::sqrt(dot(vb.data(), vb.data(), vb.size())));
}

ScoredInstance ScoredInstance::from_matrix(std::vector<double> relevance,
                                           std::vector<double> sim,
                                           double alpha, bool clamped) {
  const std::size_t m = relevance.size();
  if (sim.size() != m * m) {
    throw PreconditionError("similarity matrix must be " + std::to_string(m) +
                            "x" + std::to_string(m));
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw PreconditionError("alpha must be >= 0");
  }
  for (double r : relevance) {
    if (!(r >= -1.0 && r <= 1.0)) {
      throw PreconditionError("relevance outside [-1, 1]");
    }
  }
  const double lo = clamped ? 0.0 : -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double s = sim[i * m + j];
      if (s != sim[j * m + i]) {
        throw PreconditionError("similarity matrix is not symmetric");
      }
      if (!(s >= lo && s <= 1.0)) {
        throw PreconditionError("similarity entry outside its allowed range");
      }
    }
  }
  ScoredInstance inst;
  inst.relevance_ = std::move(relevance);
  inst.sim_ = std::move(sim);
  inst.alpha_ = alpha;
  inst.clamped_ = clamped;
  return inst;
}

ScoredInstance ScoredInstance::from_embeddings(
    std::vector<double> relevance, std::span<const EmbeddingVector> rows,
    double alpha, bool clamped, SimilarityStorage storage) {
  std::vector<const EmbeddingVector*> ptrs;
  ptrs.reserve(rows.size());
  for (const auto& row : rows) ptrs.push_back(&row);
  return from_rows(std::move(relevance), ptrs, alpha, clamped, storage);
}

ScoredInstance ScoredInstance::from_rows(
    std::vector<double> relevance, std::span<const EmbeddingVector* const> rows,
    double alpha, bool clamped, SimilarityStorage storage) {
  const std::size_t m = relevance.size();
  if (rows.size() != m) {
    throw PreconditionError("need one embedding per relevance score");
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw PreconditionError("alpha must be >= 0");
  }
  ScoredInstance inst;
  inst.relevance_ = std::move(relevance);
  inst.alpha_ = alpha;
  inst.clamped_ = clamped;
  if (m == 0) return inst;

  inst.dim_ = rows.front()->dim();
  inst.rows_.reserve(m * inst.dim_);
  inst.norms_.reserve(m);
  for (const EmbeddingVector* row : rows) {
    if (row->dim() != inst.dim_) {
      throw DimensionMismatchError("candidate embeddings differ in width");
    }
    const auto v = row->values();
    inst.rows_.insert(inst.rows_.end(), v.begin(), v.end());
    inst.norms_.push_back(std::sqrt(dot(v.data(), v.data(), v.size())));
  }
  if (storage == SimilarityStorage::kDense) {
    inst.sim_.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      inst.sim_[i * m + i] = 1.0;
      for (std::size_t j = i + 1; j < m; ++j) {
        const double s = inst.compute_similarity(i, j);
        inst.sim_[i * m + j] = s;
        inst.sim_[j * m + i] = s;
      }
    }
    inst.rows_.clear();
    inst.rows_.shrink_to_fit();
    inst.norms_.clear();
  }
  return inst;
}

double ScoredInstance::compute_similarity(std::size_t i, std::size_t j) const {
  const double s = cosine_from_parts(
      dot(rows_.data() + i * dim_, rows_.data() + j * dim_, dim_), norms_[i],
      norms_[j]);
  return clamped_ ? std::max(0.0, s) : s;
}

double ScoredInstance::similarity(std::size_t i, std::size_t j) const {
  if (!sim_.empty()) return sim_[i * relevance_.size() + j];
  return compute_similarity(i, j);
}

ScoredInstance score_instance(std::span<const Candidate> candidates,
                              const EmbeddingVector& doc_embedding,
                              const RankConfig& cfg,
                              SimilarityStorage storage) {
  std::vector<const EmbeddingVector*> rows;
  std::vector<double> relevance;
  rows.reserve(candidates.size());
  relevance.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (!c.embedding) {
      throw PreconditionError("candidate '" + c.surface +
                              "' has no embedding");
    }
    relevance.push_back(cosine(*c.embedding, doc_embedding));
    rows.push_back(&*c.embedding);
  }
  return ScoredInstance::from_rows(std::move(relevance), rows, cfg.alpha,
                                   cfg.clamp_similarity, storage);
}

double objective_value(const ScoredInstance& inst,
                       std::span<const std::size_t> subset) {
  for (std::size_t a = 0; a < subset.size(); ++a) {
    check_index(inst, subset[a]);
    for (std::size_t b = 0; b < a; ++b) {
      if (subset[a] == subset[b]) {
        throw PreconditionError("index " + std::to_string(subset[a]) +
                                " repeated in subset");
      }
    }
  }
  double relevance = 0.0;
  double penalty = 0.0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    relevance += inst.relevance(subset[a]);
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      penalty += inst.similarity(subset[a], subset[b]);
    }
  }
  return relevance - inst.alpha() * penalty;
}

double marginal_gain(const ScoredInstance& inst,
                     std::span<const std::size_t> subset, std::size_t x) {
  check_index(inst, x);
  double penalty = 0.0;
  for (std::size_t y : subset) {
    check_index(inst, y);
    if (y == x) {
      throw PreconditionError("index " + std::to_string(x) +
                              " is already selected");
    }
    penalty += inst.similarity(x, y);
  }
  return inst.relevance(x) - inst.alpha() * penalty;
}

}  // namespace keyrank
