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

#ifndef KEYRANK_METRICS_HPP_
#define KEYRANK_METRICS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyrank/types.hpp"

namespace keyrank {

// Lightweight stemmer applied per token: strips the longest of "ing", "es",
// "ed", "s" that leaves at least three characters; "s" is kept after
// another "s" ("class", "process").
std::string stem_token(std::string_view token);

// Matching key: normalize_phrase, plus stem_token on every token when `stem`.
std::string match_key(std::string_view phrase, bool stem);

bool keyphrases_match(std::string_view a, std::string_view b, bool stem);

// Gold strings matched by the predictions, one-to-one: every gold phrase and
// every prediction is used at most once, predictions claiming the first
// unmatched gold phrase (in gold order) they match. Gold is deduplicated by
// exact string.
std::vector<std::string> match_keyphrases(std::span<const std::string> predicted,
                                          std::span<const std::string> gold,
                                          bool stem);

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t predicted = 0;  // predictions considered, <= n
  std::size_t gold = 0;       // distinct gold strings
};

// P = matched / min(n, |predicted|), R = matched / |gold|, F1 harmonic mean;
// every ratio with a zero denominator is 0.
PrfScore prf_at_n(std::span<const std::string> predicted,
                  std::span<const std::string> gold, std::size_t n, bool stem);

double f1_score(double precision, double recall);

// Mean pairwise cosine distance (2 / (k(k-1))) * sum_{i<j} (1 - cos);
// 0 for fewer than two vectors.
double intra_list_distance(std::span<const EmbeddingVector> embeddings);

inline constexpr double kDefaultSubtopicTau = 0.7;

// Gold phrases grouped into subtopics: single-link clusters where any pair
// at cosine >= tau joins two clusters. Each cluster lists gold indices in
// ascending order; clusters are ordered by their first member.
std::vector<std::vector<std::size_t>> gold_subtopics(
    std::span<const std::string> gold,
    const std::map<std::string, EmbeddingVector>& gold_embeddings, double tau);

// Share of gold subtopics with at least one member matched by a selected
// candidate (its surface or normalized form). 0 when gold is empty. tau
// must lie in (0, 1); every gold string needs an embedding.
double subtopic_recall(std::span<const Candidate> selected,
                       std::span<const std::string> gold,
                       const std::map<std::string, EmbeddingVector>& gold_embeddings,
                       double tau, bool stem);

struct DocEval {
  std::string id;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double ild = 0.0;
  double sr = 0.0;
  double elapsed_ms = 0.0;
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;
};

struct AggregateEval {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double ild = 0.0;
  double sr = 0.0;
  double elapsed_ms = 0.0;
  std::size_t documents = 0;
};

enum class Averaging { kMacro, kMicro };

// Macro: plain means of the per-document values. Micro: precision and
// recall from pooled match counts (F1 from those); ild, sr and elapsed_ms
// are document means either way.
AggregateEval aggregate(std::span<const DocEval> docs,
                        Averaging averaging = Averaging::kMacro);

struct EvalReport {
  std::vector<DocEval> per_doc;
  AggregateEval aggregate;
};

}  // namespace keyrank

#endif  // KEYRANK_METRICS_HPP_
