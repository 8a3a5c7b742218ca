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

#ifndef KEYRANK_TYPES_HPP_
#define KEYRANK_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keyrank {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Violated operation precondition (index out of range, element already
// selected, unclamped instance handed to the lazy ranker, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Fixed-dimension real vector. Providers hand these out L2-normalized; the
// all-zero vector is also legal and cosine treats it as orthogonal to
// everything.
class EmbeddingVector {
 public:
  EmbeddingVector() = default;
  // Throws Error on an empty or non-finite input.
  explicit EmbeddingVector(std::vector<double> values);

  static EmbeddingVector zeros(std::size_t dim);

  std::size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool is_zero() const;
  double norm() const;
  // Unit-norm copy; the zero vector maps to itself.
  EmbeddingVector normalized() const;

  friend bool operator==(const EmbeddingVector&,
                         const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

enum class PosTag { kNoun, kAdj, kVerb, kOther };

std::string_view to_string(PosTag tag);
// Accepts "NOUN", "ADJ", "VERB", "OTHER"; throws Error otherwise.
PosTag parse_pos_tag(std::string_view name);

struct TaggedToken {
  std::string text;
  PosTag tag = PosTag::kOther;
  std::size_t index = 0;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct Candidate {
  std::string surface;
  std::string normalized;
  std::size_t position = 0;
  std::size_t length_tokens = 1;
  std::optional<EmbeddingVector> embedding;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct Document {
  std::string id;
  std::string text;
  std::optional<std::vector<TaggedToken>> tokens;
  std::optional<std::vector<std::string>> gold;
  std::optional<EmbeddingVector> embedding;

  friend bool operator==(const Document&, const Document&) = default;
};

struct RankedItem {
  Candidate candidate;
  std::size_t index = 0;  // position in the ranker's candidate list
  double marginal_gain = 0.0;
  double relevance = 0.0;
};

struct RankedSelection {
  std::vector<RankedItem> items;
  double objective_value = 0.0;
  double elapsed_ms = 0.0;

  std::vector<std::size_t> indices() const;
};

}  // namespace keyrank

#endif  // KEYRANK_TYPES_HPP_
