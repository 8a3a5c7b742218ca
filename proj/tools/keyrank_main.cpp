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

// keyrank: keyphrase extraction and diversity-aware ranking from the command
// line. See README.md for the output formats.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "keyrank/bench.hpp"
#include "keyrank/commands.hpp"
#include "keyrank/corpus.hpp"

namespace {

struct Flags {
  std::string corpus;
  std::string config_file;
  std::string output;
  std::string alpha;
  std::size_t top_n = 0;
  std::size_t dim = 0;
  std::string provider;
  std::string endpoint;
  std::uint64_t seed = 42;
  bool lazy = false;
  bool clamp = true;
  bool stem = true;
  double tau = keyrank::kDefaultSubtopicTau;
  std::size_t workers = 0;
  bool micro = false;
  bool stop_on_negative = false;
  std::size_t repetitions = 5;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("corpus", f.corpus, "Corpus file (one JSON record per line)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--config", f.config_file, "key = value config file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--output,-o", f.output, "Output file (default: stdout)");
  cmd->add_option("--alpha", f.alpha,
                  "Relevance/diversity trade-off, or a comma list (evaluate)");
  cmd->add_option("--top-n", f.top_n, "Keyphrases to select");
  cmd->add_option("--dim", f.dim, "Embedding dimension");
  cmd->add_option("--provider", f.provider, "Embedding provider")
      ->check(CLI::IsMember({"hash", "remote"}));
  cmd->add_option("--endpoint", f.endpoint,
                  "Embedding service URL (default: $KEYRANK_ENDPOINT)");
  cmd->add_option("--seed", f.seed, "Seed for hashing and projection");
  cmd->add_flag("--lazy,!--no-lazy", f.lazy, "Use the lazy greedy ranker");
  cmd->add_flag("--clamp,!--no-clamp", f.clamp,
                "Clamp similarities at zero (default on)");
  cmd->add_option("--workers", f.workers, "Worker threads (0: all cores)");
  cmd->add_flag("--stop-on-negative", f.stop_on_negative,
                "Stop selecting once the best marginal gain is negative");
}

keyrank::RunOptions resolve(const CLI::App& cmd, const Flags& f) {
  keyrank::Settings settings;
  if (const char* env = std::getenv("KEYRANK_ENDPOINT")) {
    settings.endpoint = env;
  }
  if (!f.config_file.empty()) {
    settings = keyrank::load_settings(f.config_file, settings);
  }
  keyrank::RunOptions options;
  if (cmd.count("--alpha") > 0) {
    options.alphas = keyrank::parse_alpha_list(f.alpha);
    settings.rank.alpha = options.alphas.front();
  }
  if (cmd.count("--top-n") > 0) settings.rank.top_n = f.top_n;
  if (cmd.count("--dim") > 0) settings.rank.dim = f.dim;
  if (cmd.count("--clamp") + cmd.count("--no-clamp") > 0) {
    settings.rank.clamp_similarity = f.clamp;
  }
  if (cmd.count("--provider") > 0) settings.provider = f.provider;
  if (cmd.count("--endpoint") > 0) settings.endpoint = f.endpoint;
  options.settings = settings;
  options.seed = f.seed;
  options.lazy = f.lazy;
  options.stem = f.stem;
  options.tau = f.tau;
  options.workers = f.workers;
  options.averaging =
      f.micro ? keyrank::Averaging::kMicro : keyrank::Averaging::kMacro;
  options.stop = f.stop_on_negative ? keyrank::StopRule::kStopOnNegativeGain
                                    : keyrank::StopRule::kFixedCardinality;
  options.corpus_path = f.corpus;
  return options;
}

// Writes to --output when given, stdout otherwise.
template <typename Run>
int with_output(const std::string& path, Run run) {
  if (path.empty()) return run(std::cout);
  std::ostringstream buffer;
  const int status = run(buffer);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write " << path << '\n';
    return 2;
  }
  file << buffer.str();
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyphrase extraction and relevance/diversity ranking"};
  app.require_subcommand(1);
  Flags f;

  auto* rank = app.add_subcommand("rank", "Extract and rank keyphrases");
  add_common(rank, f);

  auto* evaluate =
      app.add_subcommand("evaluate", "Rank, then score against gold");
  add_common(evaluate, f);
  evaluate->add_flag("--stem,!--no-stem", f.stem,
                     "Suffix-stripped keyphrase matching (default on)");
  evaluate->add_option("--tau", f.tau,
                       "Cosine threshold for gold subtopic clusters");
  evaluate->add_flag("--micro", f.micro, "Micro- instead of macro-averaging");

  auto* bench = app.add_subcommand("bench", "Time pipeline stages");
  add_common(bench, f);
  bench->add_option("--repetitions", f.repetitions, "Samples per measurement");

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("corpus", f.corpus, "Corpus file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto docs = keyrank::load_corpus(f.corpus);
    if (stats->parsed()) {
      const std::string name = std::filesystem::path(f.corpus).stem().string();
      return keyrank::cmd_stats(docs, name, std::cout, std::cerr);
    }
    const CLI::App* cmd = rank->parsed()       ? rank
                          : evaluate->parsed() ? evaluate
                                               : bench;
    const keyrank::RunOptions options = resolve(*cmd, f);
    return with_output(f.output, [&](std::ostream& out) {
      if (rank->parsed()) {
        return keyrank::cmd_rank(docs, options, out, std::cerr);
      }
      if (evaluate->parsed()) {
        return keyrank::cmd_evaluate(docs, options, out, std::cerr);
      }
      return keyrank::cmd_bench(docs, options, f.repetitions, out, std::cerr);
    });
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
