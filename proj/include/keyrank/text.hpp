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

#ifndef KEYRANK_TEXT_HPP_
#define KEYRANK_TEXT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyrank/types.hpp"

namespace keyrank {

struct Token {
  std::string text;
  std::size_t index = 0;
  std::size_t offset = 0;  // byte offset of the first character in the input

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits on Unicode whitespace (UTF-8 input), then peels leading and trailing
// ASCII punctuation off each piece as one-character tokens. Punctuation inside
// a piece ("state-of-the-art", "don't", "e.g") stays attached.
std::vector<Token> tokenize(std::string_view text);

// ASCII case-fold plus whitespace collapse; leading/trailing whitespace is
// dropped. Non-ASCII bytes pass through unchanged.
std::string normalize_phrase(std::string_view text);

// Rule-based coarse tagger. Lookup order: punctuation/numbers -> OTHER,
// closed-class lexicon -> OTHER, verb/adjective/noun lexicons, capitalized
// sentence-internal word -> NOUN, suffix rules, and finally NOUN for any
// unknown content word.
std::vector<TaggedToken> pos_tag(std::span<const std::string> tokens);
std::vector<TaggedToken> pos_tag(std::span<const Token> tokens);

// Maximal (ADJ)*(NOUN)+ spans, left to right without overlap. A span longer
// than max_len is cut into consecutive max_len pieces; a piece with no noun
// in it is dropped.
std::vector<Candidate> chunk_noun_phrases(std::span<const TaggedToken> tagged,
                                          std::size_t max_len);

// Recomputes `normalized` for every candidate and keeps the first occurrence
// of each normalized form, in input order. Candidates whose surface
// normalizes to the empty string are dropped.
std::vector<Candidate> normalize_and_dedup(std::vector<Candidate> cands);

// Full extraction for one document. Pre-tagged tokens, when the document
// carries them, bypass tokenize and pos_tag.
std::vector<Candidate> extract_candidates(const Document& doc,
                                          std::size_t max_phrase_tokens);

}  // namespace keyrank

#endif  // KEYRANK_TEXT_HPP_
