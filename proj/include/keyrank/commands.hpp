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

#ifndef KEYRANK_COMMANDS_HPP_
#define KEYRANK_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "keyrank/config.hpp"
#include "keyrank/embedding.hpp"
#include "keyrank/metrics.hpp"
#include "keyrank/ranker.hpp"
#include "keyrank/types.hpp"

namespace keyrank {

struct RunOptions {
  Settings settings;
  // Trade-off values to run; empty means settings.rank.alpha alone.
  std::vector<double> alphas;
  std::uint64_t seed = 42;
  bool lazy = false;
  bool stem = true;
  double tau = kDefaultSubtopicTau;
  std::size_t workers = 0;  // 0: hardware concurrency
  Averaging averaging = Averaging::kMacro;
  StopRule stop = StopRule::kFixedCardinality;
  std::string corpus_path;  // recorded in the manifest only
};

// "0.1,0.5,0.9" -> {0.1, 0.5, 0.9}. Throws ConfigError on a bad or negative
// entry.
std::vector<double> parse_alpha_list(const std::string& text);

// Validates option combinations (alpha >= 0, tau in (0, 1), lazy needs
// clamping, known provider). Throws ConfigError.
void validate_options(const RunOptions& options);

std::shared_ptr<const EmbeddingProvider> make_provider(
    const RunOptions& options);

// Output files are sectioned text. Everything before the "[timing]" line is
// the deterministic payload: a fixed header, "[manifest]" with one JSON
// object, then the command's result sections. "[timing]" holds wall-clock
// records and run details that do not affect results.
inline constexpr const char* kTimingSection = "[timing]";

// Returns the payload part of an output file (text before "[timing]").
std::string deterministic_payload(const std::string& file_text);

// Exit status: 0 when every document succeeded, 1 when any failed (ids are
// listed on `err`), 2 on a usage/validation error.
int cmd_rank(std::span<const Document> docs, const RunOptions& options,
             std::ostream& out, std::ostream& err);

// Runs the ranking pipeline once per alpha and writes one report block and
// one aggregate block per alpha. Every document must carry gold keyphrases.
int cmd_evaluate(std::span<const Document> docs, const RunOptions& options,
                 std::ostream& out, std::ostream& err);

int cmd_stats(std::span<const Document> docs, const std::string& name,
              std::ostream& out, std::ostream& err);

// In-process form of cmd_evaluate for callers that want the numbers.
std::vector<EvalReport> evaluate_corpus(std::span<const Document> docs,
                                        const RunOptions& options);

}  // namespace keyrank

#endif  // KEYRANK_COMMANDS_HPP_
