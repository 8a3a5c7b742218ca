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

#include "keyrank/types.hpp"

#include <cmath>
#include <utility>

namespace keyrank {

EmbeddingVector::EmbeddingVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error("embedding vector must have at least one entry");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error("embedding vector has a non-finite entry");
  }
}

EmbeddingVector EmbeddingVector::zeros(std::size_t dim) {
  return EmbeddingVector(std::vector<double>(dim, 0.0));
}

bool EmbeddingVector::is_zero() const {
  for (double v : values_) {
    if (v != 0.0) return false;
  }
  return true;
}

double EmbeddingVector::norm() const {
  double sq = 0.0;
  for (double v : values_) sq += v * v;
  return std::sqrt(sq);
}

EmbeddingVector EmbeddingVector::normalized() const {
  const double n = norm();
  if (n == 0.0) return *this;
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] / n;
  return EmbeddingVector(std::move(out));
}

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "NOUN";
    case PosTag::kAdj:
      return "ADJ";
    case PosTag::kVerb:
      return "VERB";
    case PosTag::kOther:
      return "OTHER";
  }
  return "OTHER";
}

PosTag parse_pos_tag(std::string_view name) {
  if (name == "NOUN") return PosTag::kNoun;
  if (name == "ADJ") return PosTag::kAdj;
  if (name == "VERB") return PosTag::kVerb;
  if (name == "OTHER") return PosTag::kOther;
  throw Error("unknown POS tag '" + std::string(name) +
              "' (expected NOUN, ADJ, VERB or OTHER)");
}

std::vector<std::size_t> RankedSelection::indices() const {
  std::vector<std::size_t> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.index);
  return out;
}

}  // namespace keyrank
