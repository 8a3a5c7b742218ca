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

#include "keyrank/commands.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "keyrank/corpus.hpp"
#include "keyrank/pipeline.hpp"
#include "keyrank/remote_provider.hpp"

namespace keyrank {
namespace {

using nlohmann::ordered_json;

struct Outcome {
  std::optional<DocumentRun> run;
  std::string error;
};

PipelineOptions pipeline_options(const RunOptions& options, double alpha) {
  PipelineOptions p;
  p.rank = options.settings.rank;
  p.rank.alpha = alpha;
  p.lazy = options.lazy;
  p.stop = options.stop;
  return p;
}

std::vector<double> alphas_of(const RunOptions& options) {
  if (options.alphas.empty()) return {options.settings.rank.alpha};
  return options.alphas;
}

std::vector<Outcome> run_all(std::span<const Document> docs,
                             const Embedder& embedder,
                             const PipelineOptions& pipeline,
                             std::size_t workers) {
  std::vector<Outcome> outcomes(docs.size());
  parallel_for(docs.size(), resolve_workers(workers), [&](std::size_t i) {
    try {
      outcomes[i].run = run_document(docs[i], embedder, pipeline);
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  });
  return outcomes;
}

ordered_json manifest(const RunOptions& options, const char* command) {
  const RankConfig& cfg = options.settings.rank;
  ordered_json m;
  m["command"] = command;
  m["corpus"] = options.corpus_path;
  m["config"] = {{"alpha", cfg.alpha},
                 {"top_n", cfg.top_n},
                 {"dim", cfg.dim},
                 {"clamp_similarity", cfg.clamp_similarity},
                 {"max_phrase_tokens", cfg.max_phrase_tokens}};
  m["alphas"] = alphas_of(options);
  m["provider"] = options.settings.provider;
  m["endpoint"] = options.settings.endpoint;
  m["seed"] = options.seed;
  m["stop_on_negative_gain"] = options.stop == StopRule::kStopOnNegativeGain;
  return m;
}

void write_header(std::ostream& out, const RunOptions& options,
                  const char* command) {
  out << "# keyrank " << command << '\n';
  out << "[manifest]\n" << manifest(options, command).dump() << '\n';
}

ordered_json stage_record(const StageTimes& t) {
  return {{"elapsed_ms", t.total_ms()},
          {"extract_ms", t.extract_ms},
          {"embed_ms", t.embed_ms},
          {"score_ms", t.score_ms},
          {"rank_ms", t.rank_ms}};
}

void report_failures(std::ostream& err, const std::vector<std::string>& ids) {
  if (ids.empty()) return;
  err << "failed documents:";
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (seen.insert(id).second) err << ' ' << id;
  }
  err << '\n';
}

struct AlphaEval {
  EvalReport report;
  std::vector<std::optional<StageTimes>> times;  // per document
  std::vector<std::string> errors;               // per document, "" when ok
};

AlphaEval evaluate_alpha(std::span<const Document> docs,
                         const RunOptions& options, const Embedder& embedder,
                         double alpha) {
  const PipelineOptions pipeline = pipeline_options(options, alpha);
  const auto outcomes = run_all(docs, embedder, pipeline, options.workers);

  AlphaEval result;
  result.times.resize(docs.size());
  result.errors.resize(docs.size());
  std::vector<std::optional<DocEval>> evals(docs.size());
  parallel_for(docs.size(), resolve_workers(options.workers),
               [&](std::size_t i) {
    const Outcome& o = outcomes[i];
    if (!o.run) {
      result.errors[i] = o.error;
      return;
    }
    try {
      const Document& doc = docs[i];
      const std::vector<std::string>& gold = *doc.gold;
      const RankedSelection& sel = o.run->selection;
      std::vector<std::string> predicted;
      std::vector<EmbeddingVector> picked;
      std::vector<Candidate> selected;
      for (const auto& item : sel.items) {
        predicted.push_back(item.candidate.surface);
        picked.push_back(*item.candidate.embedding);
        selected.push_back(item.candidate);
      }
      const auto gold_vectors = embedder.embed(gold);
      std::map<std::string, EmbeddingVector> gold_embeddings;
      for (std::size_t g = 0; g < gold.size(); ++g) {
        gold_embeddings.emplace(gold[g], gold_vectors[g]);
      }
      const PrfScore prf =
          prf_at_n(predicted, gold, pipeline.rank.top_n, options.stem);
      DocEval e;
      e.id = doc.id;
      e.precision = prf.precision;
      e.recall = prf.recall;
      e.f1 = prf.f1;
      e.matched = prf.matched;
      e.predicted = prf.predicted;
      e.gold = prf.gold;
      e.ild = intra_list_distance(picked);
      e.sr = subtopic_recall(selected, gold, gold_embeddings, options.tau,
                             options.stem);
      e.elapsed_ms = o.run->times.total_ms();
      evals[i] = std::move(e);
      result.times[i] = o.run->times;
    } catch (const std::exception& ex) {
      result.errors[i] = ex.what();
    }
  });
  for (auto& e : evals) {
    if (e) result.report.per_doc.push_back(std::move(*e));
  }
  result.report.aggregate = aggregate(result.report.per_doc, options.averaging);
  return result;
}

std::vector<std::string> missing_gold(std::span<const Document> docs) {
  std::vector<std::string> ids;
  for (const auto& d : docs) {
    if (!d.gold) ids.push_back(d.id);
  }
  return ids;
}

}  // namespace

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Settings parsed = parse_settings("alpha = " + item);
    out.push_back(parsed.rank.alpha);
  }
  if (out.empty()) throw ConfigError("empty alpha list");
  return out;
}

void validate_options(const RunOptions& options) {
  validate_config(options.settings.rank);
  for (double a : options.alphas) {
    RankConfig probe = options.settings.rank;
    probe.alpha = a;
    validate_config(probe);
  }
  if (!(options.tau > 0.0 && options.tau < 1.0)) {
    throw ConfigError("tau must lie in (0, 1)");
  }
  if (options.lazy && !options.settings.rank.clamp_similarity) {
    throw ConfigError(
        "lazy greedy requires clamped similarities (drop --no-clamp)");
  }
  const std::string& p = options.settings.provider;
  if (p != "hash" && p != "remote") {
    throw ConfigError("unknown provider '" + p + "' (expected hash or remote)");
  }
  if (p == "remote" && options.settings.endpoint.empty()) {
    throw ConfigError(
        "the remote provider needs --endpoint or KEYRANK_ENDPOINT");
  }
}

std::shared_ptr<const EmbeddingProvider> make_provider(
    const RunOptions& options) {
  if (options.settings.provider == "remote") {
    return std::make_shared<RemoteEmbeddingProvider>(
        options.settings.endpoint);
  }
  if (options.settings.provider == "hash") {
    return std::make_shared<HashEmbedProvider>(options.settings.rank.dim,
                                               options.seed);
  }
  throw ConfigError("unknown provider '" + options.settings.provider + "'");
}

std::string deterministic_payload(const std::string& file_text) {
  const std::string marker = std::string("\n") + kTimingSection + "\n";
  const auto pos = file_text.find(marker);
  return pos == std::string::npos ? file_text : file_text.substr(0, pos + 1);
}

int cmd_rank(std::span<const Document> docs, const RunOptions& options,
             std::ostream& out, std::ostream& err) {
  try {
    validate_options(options);
    if (options.alphas.size() > 1) {
      throw ConfigError("rank takes a single alpha; use evaluate for sweeps");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const double alpha = alphas_of(options).front();
  RunOptions effective = options;
  effective.settings.rank.alpha = alpha;
  effective.alphas.clear();

  const Embedder embedder(make_provider(effective),
                          effective.settings.rank.dim, effective.seed);
  const auto outcomes = run_all(docs, embedder,
                                pipeline_options(effective, alpha),
                                effective.workers);

  write_header(out, effective, "rank");
  out << "[results]\n";
  std::vector<std::string> failed;
  StageTimes totals;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    ordered_json rec;
    rec["id"] = docs[i].id;
    const Outcome& o = outcomes[i];
    if (!o.run) {
      rec["error"] = o.error;
      failed.push_back(docs[i].id);
    } else {
      ordered_json phrases = ordered_json::array();
      ordered_json gains = ordered_json::array();
      ordered_json relevance = ordered_json::array();
      for (const auto& item : o.run->selection.items) {
        phrases.push_back(item.candidate.surface);
        gains.push_back(item.marginal_gain);
        relevance.push_back(item.relevance);
      }
      rec["keyphrases"] = std::move(phrases);
      rec["gains"] = std::move(gains);
      rec["relevance"] = std::move(relevance);
      rec["objective"] = o.run->selection.objective_value;
      rec["candidates"] = o.run->candidates.size();
    }
    out << rec.dump() << '\n';
  }

  out << kTimingSection << '\n';
  out << ordered_json{{"lazy", effective.lazy},
                      {"workers", resolve_workers(effective.workers)}}
             .dump()
      << '\n';
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!outcomes[i].run) continue;
    const StageTimes& t = outcomes[i].run->times;
    ordered_json rec = {{"id", docs[i].id}};
    rec.update(stage_record(t));
    out << rec.dump() << '\n';
    totals.extract_ms += t.extract_ms;
    totals.embed_ms += t.embed_ms;
    totals.score_ms += t.score_ms;
    totals.rank_ms += t.rank_ms;
  }
  out << ordered_json{{"stage_totals", stage_record(totals)}}.dump() << '\n';

  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!outcomes[i].run) {
      err << "document " << docs[i].id << ": " << outcomes[i].error << '\n';
    }
  }
  report_failures(err, failed);
  return failed.empty() ? 0 : 1;
}

std::vector<EvalReport> evaluate_corpus(std::span<const Document> docs,
                                        const RunOptions& options) {
  validate_options(options);
  if (const auto ids = missing_gold(docs); !ids.empty()) {
    throw CorpusError("document " + ids.front() + " has no gold keyphrases");
  }
  const Embedder embedder(make_provider(options), options.settings.rank.dim,
                          options.seed);
  std::vector<EvalReport> reports;
  for (double alpha : alphas_of(options)) {
    AlphaEval eval = evaluate_alpha(docs, options, embedder, alpha);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (!eval.errors[i].empty()) {
        throw Error("document " + docs[i].id + ": " + eval.errors[i]);
      }
    }
    reports.push_back(std::move(eval.report));
  }
  return reports;
}

int cmd_evaluate(std::span<const Document> docs, const RunOptions& options,
                 std::ostream& out, std::ostream& err) {
  try {
    validate_options(options);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (const auto ids = missing_gold(docs); !ids.empty()) {
    err << "error: documents without gold keyphrases:";
    for (const auto& id : ids) err << ' ' << id;
    err << '\n';
    return 2;
  }
  const Embedder embedder(make_provider(options), options.settings.rank.dim,
                          options.seed);

  write_header(out, options, "evaluate");
  std::vector<std::string> failed;
  ordered_json timing = ordered_json::array();
  for (double alpha : alphas_of(options)) {
    const AlphaEval eval = evaluate_alpha(docs, options, embedder, alpha);
    const std::string tag = "alpha=" + format_double(alpha);
    out << "[report " << tag << "]\n";
    for (const auto& d : eval.report.per_doc) {
      out << ordered_json{{"id", d.id},
                          {"precision", d.precision},
                          {"recall", d.recall},
                          {"f1", d.f1},
                          {"ild", d.ild},
                          {"sr", d.sr}}
                 .dump()
          << '\n';
    }
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (eval.errors[i].empty()) continue;
      out << ordered_json{{"id", docs[i].id}, {"error", eval.errors[i]}}.dump()
          << '\n';
      err << "document " << docs[i].id << " (" << tag
          << "): " << eval.errors[i] << '\n';
      failed.push_back(docs[i].id);
    }
    const AggregateEval& agg = eval.report.aggregate;
    out << "[aggregate " << tag << "]\n";
    out << ordered_json{{"averaging", options.averaging == Averaging::kMacro
                                          ? "macro"
                                          : "micro"},
                        {"documents", agg.documents},
                        {"precision", agg.precision},
                        {"recall", agg.recall},
                        {"f1", agg.f1},
                        {"ild", agg.ild},
                        {"sr", agg.sr}}
               .dump()
        << '\n';
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (!eval.times[i]) continue;
      ordered_json rec = {{"alpha", alpha}, {"id", docs[i].id}};
      rec.update(stage_record(*eval.times[i]));
      timing.push_back(std::move(rec));
    }
    timing.push_back(
        ordered_json{{"alpha", alpha}, {"mean_elapsed_ms", agg.elapsed_ms}});
  }
  out << kTimingSection << '\n';
  out << ordered_json{{"lazy", options.lazy},
                      {"workers", resolve_workers(options.workers)}}
             .dump()
      << '\n';
  for (const auto& rec : timing) out << rec.dump() << '\n';
  report_failures(err, failed);
  return failed.empty() ? 0 : 1;
}

int cmd_stats(std::span<const Document> docs, const std::string& name,
              std::ostream& out, std::ostream& err) {
  try {
    out << format_stats(corpus_stats(docs), name);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace keyrank
