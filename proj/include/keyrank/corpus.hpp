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

#ifndef KEYRANK_CORPUS_HPP_
#define KEYRANK_CORPUS_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "keyrank/types.hpp"

namespace keyrank {

class CorpusError : public Error {
 public:
  using Error::Error;
};

// Line-delimited JSON, one document per line:
//   {"id": "d1", "text": "...", "gold": ["..."], "tokens": [["w", "NOUN"], ...]}
// `id` and `text` are required, `gold` and `tokens` optional. Blank lines are
// skipped. Errors name the 1-based line: "line 3: missing field text".
std::vector<Document> read_corpus(std::istream& in);
std::vector<Document> load_corpus(const std::string& path);

// Inverse of read_corpus for a single record (no trailing newline).
std::string serialize_document(const Document& doc);
void write_corpus(std::ostream& out, std::span<const Document> docs);

struct CorpusStats {
  double gkp = 0.0;  // mean gold keyphrases per document
  double kpl = 0.0;  // mean gold keyphrase length in tokens
  double dl = 0.0;   // mean document length in tokens
  std::size_t count = 0;
};

// Token counts come from tokenize(). Documents without gold count as zero
// gold keyphrases. Throws CorpusError on an empty corpus.
CorpusStats corpus_stats(std::span<const Document> docs);

// Tab-separated block with the GKP / KPL / DL column names.
std::string format_stats(const CorpusStats& stats, const std::string& name);

}  // namespace keyrank

#endif  // KEYRANK_CORPUS_HPP_
