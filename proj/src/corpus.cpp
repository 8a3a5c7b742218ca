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

#include "keyrank/corpus.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "keyrank/text.hpp"

namespace keyrank {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string at_line(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

std::vector<std::string> string_list(const json& value, const char* field,
                                     std::size_t line) {
  if (!value.is_array()) {
    throw CorpusError(at_line(line) + "field " + field +
                      " must be a list of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw CorpusError(at_line(line) + "field " + field +
                        " must be a list of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<TaggedToken> token_list(const json& value, std::size_t line) {
  const auto bad = [&](const std::string& why) {
    return CorpusError(at_line(line) + "field tokens " + why);
  };
  if (!value.is_array()) throw bad("must be a list of [text, tag] pairs");
  std::vector<TaggedToken> out;
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw bad("must be a list of [text, tag] pairs");
    }
    TaggedToken tok;
    tok.text = pair[0].get<std::string>();
    if (tok.text.empty()) throw bad("has an empty token");
    try {
      tok.tag = parse_pos_tag(pair[1].get<std::string>());
    } catch (const Error& e) {
      throw bad(e.what());
    }
    tok.index = out.size();
    out.push_back(std::move(tok));
  }
  return out;
}

Document parse_record(const std::string& line_text, std::size_t line) {
  json record;
  try {
    record = json::parse(line_text);
  } catch (const json::parse_error& e) {
    throw CorpusError(at_line(line) + "malformed record (" + e.what() + ")");
  }
  if (!record.is_object()) {
    throw CorpusError(at_line(line) + "malformed record (not an object)");
  }
  Document doc;
  for (const char* field : {"id", "text"}) {
    const auto it = record.find(field);
    if (it == record.end()) {
      throw CorpusError(at_line(line) + "missing field " + field);
    }
    if (!it->is_string()) {
      throw CorpusError(at_line(line) + "field " + field + " must be a string");
    }
  }
  doc.id = record["id"].get<std::string>();
  doc.text = record["text"].get<std::string>();
  if (doc.id.empty()) throw CorpusError(at_line(line) + "field id is empty");
  if (const auto it = record.find("gold"); it != record.end()) {
    doc.gold = string_list(*it, "gold", line);
  }
  if (const auto it = record.find("tokens"); it != record.end()) {
    doc.tokens = token_list(*it, line);
  }
  return doc;
}

}  // namespace

std::vector<Document> read_corpus(std::istream& in) {
  std::vector<Document> docs;
  std::set<std::string> ids;
  std::string line_text;
  std::size_t line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    if (!line_text.empty() && line_text.back() == '\r') line_text.pop_back();
    if (line_text.find_first_not_of(" \t") == std::string::npos) continue;
    Document doc = parse_record(line_text, line);
    if (!ids.insert(doc.id).second) {
      throw CorpusError(at_line(line) + "duplicate id " + doc.id);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open corpus file " + path);
  return read_corpus(in);
}

std::string serialize_document(const Document& doc) {
  ordered_json record;
  record["id"] = doc.id;
  record["text"] = doc.text;
  if (doc.gold) record["gold"] = *doc.gold;
  if (doc.tokens) {
    ordered_json tokens = ordered_json::array();
    for (const auto& t : *doc.tokens) {
      tokens.push_back(
          ordered_json::array({t.text, std::string(to_string(t.tag))}));
    }
    record["tokens"] = std::move(tokens);
  }
  return record.dump();
}

void write_corpus(std::ostream& out, std::span<const Document> docs) {
  for (const auto& doc : docs) out << serialize_document(doc) << '\n';
}

CorpusStats corpus_stats(std::span<const Document> docs) {
  if (docs.empty()) throw CorpusError("corpus is empty");
  CorpusStats stats;
  stats.count = docs.size();
  std::size_t gold_total = 0;
  std::size_t gold_tokens = 0;
  std::size_t doc_tokens = 0;
  for (const auto& doc : docs) {
    doc_tokens += tokenize(doc.text).size();
    if (!doc.gold) continue;
    gold_total += doc.gold->size();
    for (const auto& kp : *doc.gold) gold_tokens += tokenize(kp).size();
  }
  const double n = static_cast<double>(docs.size());
  stats.gkp = static_cast<double>(gold_total) / n;
  stats.kpl = gold_total > 0 ? static_cast<double>(gold_tokens) /
                                   static_cast<double>(gold_total)
                             : 0.0;
  stats.dl = static_cast<double>(doc_tokens) / n;
  return stats;
}

std::string format_stats(const CorpusStats& stats, const std::string& name) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << "Dataset\tGKP\tKPL\tDL\tDocs\n"
      << name << '\t' << stats.gkp << '\t' << stats.kpl << '\t' << stats.dl
      << '\t' << stats.count << '\n';
  return out.str();
}

}  // namespace keyrank
