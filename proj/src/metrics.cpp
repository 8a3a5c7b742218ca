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

#include "keyrank/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "keyrank/objective.hpp"
#include "keyrank/text.hpp"

namespace keyrank {
namespace {

std::vector<std::string> distinct(std::span<const std::string> items) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& s : items) {
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

std::string stem_token(std::string_view token) {
  constexpr std::size_t kMinStem = 3;
  for (std::string_view suffix : {"ing", "es", "ed", "s"}) {
    if (!ends_with(token, suffix)) continue;
    if (token.size() < suffix.size() + kMinStem) continue;
    if (suffix == "s" && ends_with(token, "ss")) continue;
    return std::string(token.substr(0, token.size() - suffix.size()));
  }
  return std::string(token);
}

std::string match_key(std::string_view phrase, bool stem) {
  const std::string norm = normalize_phrase(phrase);
  if (!stem) return norm;
  std::string out;
  std::size_t start = 0;
  while (start <= norm.size()) {
    std::size_t end = norm.find(' ', start);
    if (end == std::string::npos) end = norm.size();
    if (end > start) {
      if (!out.empty()) out.push_back(' ');
      out += stem_token(std::string_view(norm).substr(start, end - start));
    }
    start = end + 1;
  }
  return out;
}

bool keyphrases_match(std::string_view a, std::string_view b, bool stem) {
  const std::string ka = normalize_phrase(a);
  const std::string kb = normalize_phrase(b);
  if (ka == kb) return true;
  return stem && match_key(ka, true) == match_key(kb, true);
}

std::vector<std::string> match_keyphrases(std::span<const std::string> predicted,
                                          std::span<const std::string> gold,
                                          bool stem) {
  const auto gold_set = distinct(gold);
  std::vector<bool> used(gold_set.size(), false);
  std::vector<std::string> matched;
  for (const auto& p : predicted) {
    for (std::size_t g = 0; g < gold_set.size(); ++g) {
      if (used[g] || !keyphrases_match(p, gold_set[g], stem)) continue;
      used[g] = true;
      matched.push_back(gold_set[g]);
      break;
    }
  }
  return matched;
}

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

PrfScore prf_at_n(std::span<const std::string> predicted,
                  std::span<const std::string> gold, std::size_t n,
                  bool stem) {
  PrfScore out;
  const auto top = predicted.first(std::min(n, predicted.size()));
  out.predicted = top.size();
  out.gold = distinct(gold).size();
  out.matched = match_keyphrases(top, gold, stem).size();
  if (out.predicted > 0) {
    out.precision = static_cast<double>(out.matched) /
                    static_cast<double>(out.predicted);
  }
  if (out.gold > 0) {
    out.recall =
        static_cast<double>(out.matched) / static_cast<double>(out.gold);
  }
  out.f1 = f1_score(out.precision, out.recall);
  return out;
}

double intra_list_distance(std::span<const EmbeddingVector> embeddings) {
  const std::size_t k = embeddings.size();
  if (k < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      total += 1.0 - cosine(embeddings[i], embeddings[j]);
    }
  }
  return 2.0 * total / (static_cast<double>(k) * static_cast<double>(k - 1));
}

std::vector<std::vector<std::size_t>> gold_subtopics(
    std::span<const std::string> gold,
    const std::map<std::string, EmbeddingVector>& gold_embeddings,
    double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw PreconditionError("subtopic tau must lie in (0, 1)");
  }
  const auto items = distinct(gold);
  std::vector<const EmbeddingVector*> vecs;
  vecs.reserve(items.size());
  for (const auto& g : items) {
    const auto it = gold_embeddings.find(g);
    if (it == gold_embeddings.end()) {
      throw PreconditionError("no embedding for gold keyphrase '" + g + "'");
    }
    vecs.push_back(&it->second);
  }
  std::vector<std::size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (cosine(*vecs[i], *vecs[j]) >= tau) {
        const std::size_t a = find_root(parent, i);
        const std::size_t b = find_root(parent, j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::size_t> slot(items.size(), items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t root = find_root(parent, i);
    if (slot[root] == items.size()) {
      slot[root] = clusters.size();
      clusters.emplace_back();
    }
    clusters[slot[root]].push_back(i);
  }
  return clusters;
}

double subtopic_recall(
    std::span<const Candidate> selected, std::span<const std::string> gold,
    const std::map<std::string, EmbeddingVector>& gold_embeddings, double tau,
    bool stem) {
  const auto clusters = gold_subtopics(gold, gold_embeddings, tau);
  if (clusters.empty()) return 0.0;
  const auto items = distinct(gold);
  std::size_t covered = 0;
  for (const auto& cluster : clusters) {
    const bool hit = std::any_of(
        cluster.begin(), cluster.end(), [&](std::size_t g) {
          return std::any_of(
              selected.begin(), selected.end(), [&](const Candidate& c) {
                return keyphrases_match(c.surface, items[g], stem) ||
                       keyphrases_match(c.normalized, items[g], stem);
              });
        });
    if (hit) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(clusters.size());
}

AggregateEval aggregate(std::span<const DocEval> docs, Averaging averaging) {
  AggregateEval out;
  out.documents = docs.size();
  if (docs.empty()) return out;
  const double n = static_cast<double>(docs.size());
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;
  for (const auto& d : docs) {
    out.precision += d.precision;
    out.recall += d.recall;
    out.f1 += d.f1;
    out.ild += d.ild;
    out.sr += d.sr;
    out.elapsed_ms += d.elapsed_ms;
    matched += d.matched;
    predicted += d.predicted;
    gold += d.gold;
  }
  out.precision /= n;
  out.recall /= n;
  out.f1 /= n;
  out.ild /= n;
  out.sr /= n;
  out.elapsed_ms /= n;
  if (averaging == Averaging::kMicro) {
    out.precision = predicted > 0 ? static_cast<double>(matched) /
                                        static_cast<double>(predicted)
                                  : 0.0;
    out.recall =
        gold > 0 ? static_cast<double>(matched) / static_cast<double>(gold)
                 : 0.0;
    out.f1 = f1_score(out.precision, out.recall);
  }
  return out;
}

}  // namespace keyrank
