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

#ifndef KEYRANK_OBJECTIVE_HPP_
#define KEYRANK_OBJECTIVE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "keyrank/config.hpp"
#include "keyrank/types.hpp"

namespace keyrank {

// cos(a, b), clamped into [-1, 1]; 0 when either vector is zero. Throws
// DimensionMismatchError when the widths differ.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

enum class SimilarityStorage {
  kDense,     // all M*M pairs computed up front
  kOnDemand,  // pairs computed from the stored embeddings when read
};

// Relevance of every candidate to the document, pairwise similarities and
// the trade-off weight: everything the objective
//   f(S) = sum_{i in S} rel[i] - alpha * sum_{i<j in S} sim[i][j]
// needs. Immutable once built.
class ScoredInstance {
 public:
  // Explicit instance. `sim` is M*M row-major and must be exactly symmetric;
  // the diagonal is ignored. Entries must lie in [0, 1] when `clamped`, in
  // [-1, 1] otherwise; relevance in [-1, 1].
  static ScoredInstance from_matrix(std::vector<double> relevance,
                                    std::vector<double> sim, double alpha,
                                    bool clamped);

  // Instance whose similarities are cosines of `embeddings` (clamped at zero
  // when `clamped`), read lazily.
  static ScoredInstance from_embeddings(std::vector<double> relevance,
                                        std::span<const EmbeddingVector> rows,
                                        double alpha, bool clamped,
                                        SimilarityStorage storage);

  std::size_t size() const { return relevance_.size(); }
  double alpha() const { return alpha_; }
  bool clamped() const { return clamped_; }
  bool dense() const { return !sim_.empty() || relevance_.empty(); }

  double relevance(std::size_t i) const { return relevance_[i]; }
  std::span<const double> relevance() const { return relevance_; }
  double similarity(std::size_t i, std::size_t j) const;

 private:
  friend ScoredInstance score_instance(std::span<const Candidate>,
                                       const EmbeddingVector&,
                                       const RankConfig&, SimilarityStorage);

  ScoredInstance() = default;

  static ScoredInstance from_rows(std::vector<double> relevance,
                                  std::span<const EmbeddingVector* const> rows,
                                  double alpha, bool clamped,
                                  SimilarityStorage storage);

  double compute_similarity(std::size_t i, std::size_t j) const;

  std::vector<double> relevance_;
  std::vector<double> sim_;  // dense storage, M*M
  // On-demand storage: raw rows and their norms.
  std::size_t dim_ = 0;
  std::vector<double> rows_;
  std::vector<double> norms_;
  double alpha_ = 0.0;
  bool clamped_ = true;
};

// relevance[i] = cos(e_i, e_doc); similarities are candidate cosines,
// clamped with max(0, .) when cfg.clamp_similarity. Every candidate must
// carry an embedding of doc_embedding's width.
ScoredInstance score_instance(std::span<const Candidate> candidates,
                              const EmbeddingVector& doc_embedding,
                              const RankConfig& cfg,
                              SimilarityStorage storage =
                                  SimilarityStorage::kDense);

// f(S) over unordered pairs. Throws PreconditionError on an out-of-range or
// repeated index.
double objective_value(const ScoredInstance& inst,
                       std::span<const std::size_t> subset);

// rel[x] - alpha * sum_{y in S} sim[x][y], the sum taken in the order S is
// given. Throws PreconditionError when x is in S or out of range.
double marginal_gain(const ScoredInstance& inst,
                     std::span<const std::size_t> subset, std::size_t x);

}  // namespace keyrank

#endif  // KEYRANK_OBJECTIVE_HPP_
