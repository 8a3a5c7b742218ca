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

#include "keyrank/text.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>

namespace keyrank {
namespace {

bool is_ascii_punct(unsigned char c) {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
         (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
}

bool is_unicode_space(std::uint32_t cp) {
  return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 ||
         cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

// Decodes one UTF-8 sequence at `pos`. Invalid bytes decode as themselves
// with length 1 so that tokenization never throws.
std::pair<std::uint32_t, std::size_t> decode_utf8(std::string_view s,
                                                  std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  std::uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1};
  }
  if (pos + len > s.size()) return {b0, 1};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[pos + k]);
    if ((b & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

void emit_piece(std::string_view text, std::size_t begin, std::size_t end,
                std::vector<Token>& out) {
  auto push = [&](std::size_t b, std::size_t e) {
    out.push_back(Token{std::string(text.substr(b, e - b)), out.size(), b});
  };
  std::size_t lo = begin;
  std::size_t hi = end;
  while (lo < hi && is_ascii_punct(static_cast<unsigned char>(text[lo]))) {
    ++lo;
  }
  // A piece made only of punctuation splits into single characters.
  if (lo == hi) {
    for (std::size_t i = begin; i < end; ++i) push(i, i + 1);
    return;
  }
  while (hi > lo && is_ascii_punct(static_cast<unsigned char>(text[hi - 1]))) {
    --hi;
  }
  for (std::size_t i = begin; i < lo; ++i) push(i, i + 1);
  push(lo, hi);
  for (std::size_t i = hi; i < end; ++i) push(i, i + 1);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  std::size_t piece_begin = std::string_view::npos;
  while (pos < text.size()) {
    const auto [cp, len] = decode_utf8(text, pos);
    if (is_unicode_space(cp)) {
      if (piece_begin != std::string_view::npos) {
        emit_piece(text, piece_begin, pos, out);
        piece_begin = std::string_view::npos;
      }
    } else if (piece_begin == std::string_view::npos) {
      piece_begin = pos;
    }
    pos += len;
  }
  if (piece_begin != std::string_view::npos) {
    emit_piece(text, piece_begin, text.size(), out);
  }
  return out;
}

std::string normalize_phrase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto [cp, len] = decode_utf8(text, pos);
    if (is_unicode_space(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      for (std::size_t k = 0; k < len; ++k) {
        char c = text[pos + k];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        out.push_back(c);
      }
    }
    pos += len;
  }
  return out;
}

std::vector<Candidate> chunk_noun_phrases(std::span<const TaggedToken> tagged,
                                          std::size_t max_len) {
  if (max_len == 0) throw PreconditionError("max_len must be >= 1");
  std::vector<Candidate> out;
  const std::size_t n = tagged.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t nouns_begin = i;
    while (nouns_begin < n && tagged[nouns_begin].tag == PosTag::kAdj) {
      ++nouns_begin;
    }
    std::size_t end = nouns_begin;
    while (end < n && tagged[end].tag == PosTag::kNoun) ++end;
    if (end == nouns_begin) {
      // No noun after the adjectives: skip them (or the current token).
      i = nouns_begin > i ? nouns_begin : i + 1;
      continue;
    }
    for (std::size_t piece = i; piece < end; piece += max_len) {
      const std::size_t piece_end = std::min(end, piece + max_len);
      if (piece_end <= nouns_begin) continue;  // adjectives only
      Candidate c;
      for (std::size_t k = piece; k < piece_end; ++k) {
        if (k > piece) c.surface.push_back(' ');
        c.surface += tagged[k].text;
      }
      c.normalized = normalize_phrase(c.surface);
      c.position = tagged[piece].index;
      c.length_tokens = piece_end - piece;
      out.push_back(std::move(c));
    }
    i = end;
  }
  return out;
}

std::vector<Candidate> normalize_and_dedup(std::vector<Candidate> cands) {
  std::vector<Candidate> out;
  out.reserve(cands.size());
  std::unordered_set<std::string> seen;
  for (auto& c : cands) {
    c.normalized = normalize_phrase(c.surface);
    if (c.normalized.empty()) continue;
    if (!seen.insert(c.normalized).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Candidate> extract_candidates(const Document& doc,
                                          std::size_t max_phrase_tokens) {
  if (doc.tokens) {
    return normalize_and_dedup(
        chunk_noun_phrases(*doc.tokens, max_phrase_tokens));
  }
  const auto tagged = pos_tag(std::span<const Token>(tokenize(doc.text)));
  return normalize_and_dedup(chunk_noun_phrases(tagged, max_phrase_tokens));
}

}  // namespace keyrank
