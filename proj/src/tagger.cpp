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

#include <string_view>
#include <unordered_set>

#include "keyrank/text.hpp"

namespace keyrank {
namespace {

using Lexicon = std::unordered_set<std::string_view>;

// Determiners, pronouns, prepositions, conjunctions, auxiliaries, modals,
// common adverbs and number words.
const Lexicon& closed_class() {
  static const Lexicon words = {
      "a", "an", "the", "this", "that", "these", "those", "some", "any",
      "each", "every", "no", "all", "both", "either", "neither", "another",
      "such", "what", "which", "whose", "who", "whom", "whatever", "i", "me",
      "my", "mine", "we", "us", "our", "ours", "you", "your", "yours", "he",
      "him", "his", "she", "her", "hers", "it", "its", "they", "them",
      "their", "theirs", "itself", "themselves", "ourselves", "himself",
      "herself", "myself", "yourself", "one", "ones", "of", "in", "on", "at",
      "by", "for", "with", "without", "about", "against", "between", "into",
      "onto", "through", "during", "before", "after", "above", "below", "to",
      "from", "up", "down", "out", "off", "over", "under", "upon", "within",
      "across", "along", "among", "around", "behind", "beyond", "despite",
      "except", "like", "near", "per", "since", "toward", "towards", "via",
      "versus", "vs", "than", "as", "and", "or", "but", "nor", "so", "yet",
      "if", "because", "although", "though", "while", "whereas", "unless",
      "until", "whether", "where", "when", "how", "why", "then", "thus",
      "hence", "therefore", "however", "moreover", "furthermore", "also",
      "not", "only", "very", "too", "just", "even", "still", "already",
      "often", "always", "never", "ever", "sometimes", "here", "there",
      "now", "again", "further", "rather", "quite", "almost", "instead",
      "together", "especially", "is", "are", "was", "were", "be", "been",
      "being", "am", "do", "does", "did", "done", "doing", "have", "has",
      "had", "having", "can", "could", "may", "might", "must", "shall",
      "should", "will", "would", "other", "others", "more", "most", "less",
      "least", "many", "much", "few", "several", "own", "same", "two",
      "three", "four", "five", "six", "seven", "eight", "nine", "ten",
      "first", "second", "third", "etc", "ie", "eg"};
  return words;
}

const Lexicon& verbs() {
  static const Lexicon words = {
      "plays", "play", "played", "improves", "improve", "improved", "uses",
      "use", "used", "using", "show", "shows", "showed", "shown", "propose",
      "proposes", "proposed", "present", "presents", "presented", "make",
      "makes", "made", "making", "take", "takes", "took", "taken", "give",
      "gives", "gave", "given", "get", "gets", "got", "provide", "provides",
      "provided", "providing", "achieve", "achieves", "achieved", "achieving",
      "outperform", "outperforms", "outperformed", "select", "selects",
      "selected", "selecting", "extract", "extracts", "extracted",
      "extracting", "rank", "ranks", "ranked", "evaluate", "evaluates",
      "evaluated", "compute", "computes", "computed", "computing", "measure",
      "measures", "measured", "enable", "enables", "enabled", "ensure",
      "ensures", "ensured", "ensuring", "capture", "captures", "captured",
      "focus", "focuses", "focused", "include", "includes", "included",
      "including", "introduce", "introduces", "introduced", "describe",
      "describes", "described", "require", "requires", "required",
      "reduce", "reduces", "reduced", "increase", "increases", "increased",
      "allow", "allows", "allowed", "balance", "balances", "balanced",
      "maximize", "maximizes", "maximized", "minimize", "minimizes",
      "minimized", "generate", "generates", "generated", "generating",
      "represent", "represents", "represented", "remain", "remains",
      "remained", "become", "becomes", "became", "seem", "seems", "seemed",
      "find", "finds", "found", "know", "knows", "known", "see", "sees",
      "saw", "seen", "go", "goes", "went", "gone", "come", "comes", "came",
      "say", "says", "said", "think", "thinks", "thought", "work", "works",
      "worked", "run", "runs", "ran", "need", "needs", "needed", "help",
      "helps", "helped", "apply", "applies", "applied", "perform",
      "performs", "performed", "obtain", "obtains", "obtained", "lead",
      "leads", "led", "contain", "contains", "contained", "consist",
      "consists", "consisted", "compare", "compares", "compared", "suggest",
      "suggests", "suggested", "indicate", "indicates", "indicated",
      "demonstrate", "demonstrates", "demonstrated", "develop", "develops",
      "developed", "study", "studies", "studied", "explore", "explores",
      "explored", "assist", "assists", "assisted", "overlook", "overlooks",
      "overlooked", "covers", "covered", "adds", "added", "yields",
      "yielded", "employ", "employs", "employed", "begin", "begins", "began",
      "serve", "serves", "served", "operate", "operates", "operated",
      "confirm", "confirms", "confirmed", "enhance", "enhances", "enhanced",
      "offer", "offers", "offered", "rely", "relies", "relied", "fail",
      "fails", "failed", "exhibit", "exhibits", "exhibited", "emphasize",
      "emphasizes", "emphasized", "prioritize", "prioritized", "penalize",
      "penalizes", "penalized", "promote", "promotes", "promoted",
      "construct", "constructs", "constructed", "adding", "selecting",
      "learn", "learns", "learned", "learnt", "repeat", "repeats",
      "repeated", "degrade", "degrades", "degraded", "support", "supports",
      "supported", "limit", "limits", "limited", "keep", "keeps", "kept",
      "transfer", "transfers", "transferred", "estimate", "estimates",
      "estimated", "train", "trains", "trained", "flag", "flags", "flagged",
      "spend", "spends", "spent", "combine", "combines", "combined",
      "predict", "predicts", "predicted", "detect", "detects", "detected",
      "infer", "infers", "inferred", "return", "returns", "returned",
      "solve", "solves", "solved", "address", "addresses", "addressed",
      "exploit", "exploits", "exploited", "leverage", "leverages",
      "leveraged", "build", "builds", "built", "design", "designs",
      "designed", "adds", "add", "gives", "enforce", "enforces",
      "enforced", "mine", "mines", "mined", "estimate", "tend", "tends",
      "allowing", "requiring", "according", "based", "depends", "depend"};
  return words;
}

const Lexicon& adjectives() {
  static const Lexicon words = {
      "deep", "new", "good", "great", "high", "low", "large", "small", "big",
      "long", "short", "old", "young", "early", "late", "full", "simple",
      "complex", "recent", "common", "main", "major", "minor", "key",
      "efficient", "effective", "different", "similar", "important",
      "relevant", "diverse", "novel", "robust", "fast", "slow", "quick",
      "semantic", "automatic", "dynamic", "specific", "scientific", "public",
      "basic", "economic", "electronic", "genetic", "linguistic", "neural",
      "random", "various", "unsupervised", "supervised", "pretrained",
      "pre-trained", "contextual", "redundant", "representative", "optimal",
      "competitive", "comprehensive", "broad", "narrow", "strong", "weak",
      "free", "open", "natural", "social", "human", "available", "possible",
      "real", "true", "false", "best", "better", "higher", "lower", "larger",
      "smaller", "greater", "wide", "wider", "local", "global", "general",
      "previous", "current", "certain", "intricate", "traditional",
      "principled", "underexplored", "crucial", "nuanced", "overall",
      "essential", "incremental", "pairwise", "submodular", "greedy",
      "hard", "easy", "difficult", "clear", "poor", "rich", "whole",
      "single", "multiple", "entire", "numerous", "heuristic", "formal",
      "theoretical", "empirical", "statistical", "automated", "mutual"};
  return words;
}

// Content words the suffix rules would get wrong.
const Lexicon& nouns() {
  static const Lexicon words = {
      "retrieval", "proposal", "approval", "removal", "arrival", "survival",
      "trial", "interval", "journal", "signal", "animal", "material",
      "capital", "hospital", "terminal", "portal", "crystal", "metal",
      "manual", "festival", "rival", "principal", "individual", "potential",
      "professional", "criminal", "chemical", "editorial", "tutorial",
      "referral", "rehearsal", "renewal", "withdrawal",
      "deal", "goal", "model", "level", "label", "channel", "kernel",
      "panel", "hotel", "vessel", "tunnel", "detective",
      "objective", "alternative", "initiative", "executive", "relative",
      "perspective", "incentive", "directive", "archive",
      "collective", "table", "variable", "cable", "vocabulary", "nothing",
      "anything", "something", "everything", "thing", "king", "ring",
      "spring", "string", "evening", "morning", "ceiling", "wing", "bring",
      "beijing", "topic", "logic", "music", "magic", "traffic", "clinic",
      "graphic", "mechanic", "diversity", "relevance", "results", "result"};
  return words;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool has_alnum(std::string_view s) {
  for (char c : s) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
        (c >= '0' && c <= '9') || static_cast<unsigned char>(c) >= 0x80) {
      return true;
    }
  }
  return false;
}

bool is_sentence_end(std::string_view token) {
  return token == "." || token == "!" || token == "?";
}

PosTag tag_one(std::string_view token, std::string_view lower,
               bool sentence_initial) {
  if (!has_alnum(token)) return PosTag::kOther;
  if (token.front() >= '0' && token.front() <= '9') return PosTag::kOther;
  if (closed_class().contains(lower)) return PosTag::kOther;
  if (verbs().contains(lower)) return PosTag::kVerb;
  if (nouns().contains(lower)) return PosTag::kNoun;
  if (adjectives().contains(lower)) return PosTag::kAdj;
  if (!sentence_initial && token.front() >= 'A' && token.front() <= 'Z') {
    return PosTag::kNoun;
  }
  for (std::string_view suffix :
       {"tion", "sion", "ment", "ness", "ity", "ism", "er", "ing"}) {
    if (ends_with(lower, suffix)) return PosTag::kNoun;
  }
  for (std::string_view suffix :
       {"ive", "al", "ous", "able", "ible", "ful", "less"}) {
    if (ends_with(lower, suffix)) return PosTag::kAdj;
  }
  if (ends_with(lower, "ly")) return PosTag::kOther;
  for (std::string_view suffix : {"ize", "ise", "ify", "ed"}) {
    if (ends_with(lower, suffix)) return PosTag::kVerb;
  }
  return PosTag::kNoun;
}

}  // namespace

std::vector<TaggedToken> pos_tag(std::span<const std::string> tokens) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    const bool initial = i == 0 || is_sentence_end(tokens[i - 1]);
    out.push_back(
        TaggedToken{tok, tag_one(tok, normalize_phrase(tok), initial), i});
  }
  return out;
}

std::vector<TaggedToken> pos_tag(std::span<const Token> tokens) {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) words.push_back(t.text);
  return pos_tag(words);
}

}  // namespace keyrank
