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

#include "keyrank/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <thread>

#include "keyrank/objective.hpp"
#include "keyrank/pipeline.hpp"
#include "keyrank/ranker.hpp"

namespace keyrank {
namespace {

using Clock = std::chrono::steady_clock;

EmbeddingVector random_unit(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  for (double& x : v) x = gauss(rng);
  return EmbeddingVector(std::move(v)).normalized();
}

struct SyntheticInstance {
  std::vector<Candidate> candidates;
  EmbeddingVector doc;
};

SyntheticInstance make_instance(std::size_t m, std::size_t dim,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SyntheticInstance s;
  s.doc = random_unit(rng, dim);
  s.candidates.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    s.candidates[i].surface = "c" + std::to_string(i);
    s.candidates[i].normalized = s.candidates[i].surface;
    s.candidates[i].position = i;
    s.candidates[i].embedding = random_unit(rng, dim);
  }
  return s;
}

// Median per-call time of score + rank over `repetitions` samples.
// Mean wall time of one score + rank call, averaged over enough calls to
// cover about spec.candidates_per_sample candidates.
template <typename RankFn>
double sample_ms(const SyntheticInstance& s, const ScalingSpec& spec,
                 RankFn rank, double& sink) {
  RankConfig cfg;
  cfg.alpha = spec.alpha;
  cfg.top_n = spec.top_n;
  cfg.dim = spec.dim;
  const std::size_t m = std::max<std::size_t>(1, s.candidates.size());
  const std::size_t calls =
      std::max<std::size_t>(1, spec.candidates_per_sample / m);
  const auto start = Clock::now();
  for (std::size_t c = 0; c < calls; ++c) {
    const ScoredInstance inst = score_instance(s.candidates, s.doc, cfg,
                                               SimilarityStorage::kOnDemand);
    sink += rank(inst, s.candidates, spec.top_n).objective_value;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return ms / static_cast<double>(calls);
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<ScalingPoint> scaling_series(const ScalingSpec& spec) {
  std::vector<SyntheticInstance> instances;
  for (std::size_t m : spec.sizes) {
    instances.push_back(make_instance(m, spec.dim, spec.seed + m));
  }
  const auto naive = [](const ScoredInstance& inst,
                        std::span<const Candidate> c, std::size_t n) {
    return greedy_rank(inst, c, n);
  };
  const auto lazy = [](const ScoredInstance& inst,
                       std::span<const Candidate> c, std::size_t n) {
    return lazy_greedy_rank(inst, c, n);
  };
  // Rounds sweep every size in turn, so a burst of machine noise lands on
  // all sizes instead of inflating one of them.
  const std::size_t k = spec.sizes.size();
  std::vector<std::vector<double>> naive_samples(k), lazy_samples(k);
  double sink = 0.0;
  for (std::size_t r = 0; r < spec.repetitions; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      naive_samples[i].push_back(sample_ms(instances[i], spec, naive, sink));
      lazy_samples[i].push_back(sample_ms(instances[i], spec, lazy, sink));
    }
  }
  std::vector<ScalingPoint> points;
  for (std::size_t i = 0; i < k; ++i) {
    ScalingPoint p;
    p.m = spec.sizes[i];
    p.naive_ms = median(naive_samples[i]);
    p.lazy_ms = median(lazy_samples[i]);
    // Keeps the optimizer from discarding the timed work.
    if (std::isnan(sink)) p.naive_ms = 0.0;
    points.push_back(p);
  }
  return points;
}

int cmd_bench(std::span<const Document> docs, const RunOptions& options,
              std::size_t repetitions, std::ostream& out, std::ostream& err) {
  try {
    validate_options(options);
    if (repetitions < kMinBenchRepetitions) {
      throw ConfigError("bench needs at least " +
                        std::to_string(kMinBenchRepetitions) +
                        " repetitions, got " + std::to_string(repetitions));
    }
    if (options.alphas.size() > 1) {
      throw ConfigError("bench takes a single alpha");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  RunOptions effective = options;
  if (!options.alphas.empty()) {
    effective.settings.rank.alpha = options.alphas.front();
  }
  const Embedder embedder(make_provider(effective),
                          effective.settings.rank.dim, effective.seed);
  PipelineOptions pipeline;
  pipeline.rank = effective.settings.rank;
  pipeline.lazy = effective.lazy;
  pipeline.stop = effective.stop;

  std::vector<DocBench> rows(docs.size());
  std::vector<std::string> errors(docs.size());
  // Sequential on purpose: concurrent documents would skew each other's
  // wall-clock numbers.
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::vector<double> ex, em, sc, rk;
    try {
      for (std::size_t r = 0; r < repetitions; ++r) {
        const DocumentRun run = run_document(docs[i], embedder, pipeline);
        rows[i].candidates = run.candidates.size();
        ex.push_back(run.times.extract_ms);
        em.push_back(run.times.embed_ms);
        sc.push_back(run.times.score_ms);
        rk.push_back(run.times.rank_ms);
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
      continue;
    }
    rows[i].id = docs[i].id;
    rows[i].extract_ms = median(ex);
    rows[i].embed_ms = median(em);
    rows[i].score_ms = median(sc);
    rows[i].rank_ms = median(rk);
  }

  ScalingSpec spec;
  spec.alpha = effective.settings.rank.alpha;
  spec.repetitions = repetitions;
  spec.seed = effective.seed;
  const auto series = scaling_series(spec);

  out << "# keyrank bench\n";
  out << "[environment]\n";
  out << "hardware_threads\t" << std::thread::hardware_concurrency() << '\n';
#if defined(__VERSION__)
  out << "compiler\t" << __VERSION__ << '\n';
#endif
  out << "repetitions\t" << repetitions << '\n';
  out << "provider\t" << effective.settings.provider << '\n';
  out << "dim\t" << effective.settings.rank.dim << '\n';
  out << "[documents]\n";
  out << "id\tcandidates\textract_ms\tembed_ms\tscore_ms\trank_ms\n";
  out << std::fixed << std::setprecision(4);
  std::vector<std::string> failed;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!errors[i].empty()) {
      err << "document " << docs[i].id << ": " << errors[i] << '\n';
      failed.push_back(docs[i].id);
      continue;
    }
    const DocBench& b = rows[i];
    out << b.id << '\t' << b.candidates << '\t' << b.extract_ms << '\t'
        << b.embed_ms << '\t' << b.score_ms << '\t' << b.rank_ms << '\n';
  }
  out << "[scaling top_n=" << spec.top_n << " dim=" << spec.dim << "]\n";
  out << "m\tnaive_ms\tlazy_ms\n";
  double naive_1000 = 0.0, naive_4000 = 0.0, lazy_1000 = 0.0, lazy_4000 = 0.0;
  for (const auto& p : series) {
    out << p.m << '\t' << p.naive_ms << '\t' << p.lazy_ms << '\n';
    if (p.m == 1000) {
      naive_1000 = p.naive_ms;
      lazy_1000 = p.lazy_ms;
    }
    if (p.m == 4000) {
      naive_4000 = p.naive_ms;
      lazy_4000 = p.lazy_ms;
    }
  }
  if (naive_1000 > 0.0 && lazy_1000 > 0.0) {
    out << "ratio_4000_over_1000_naive\t" << naive_4000 / naive_1000 << '\n';
    out << "ratio_4000_over_1000_lazy\t" << lazy_4000 / lazy_1000 << '\n';
  }
  if (!failed.empty()) {
    err << "failed documents:";
    for (const auto& id : failed) err << ' ' << id;
    err << '\n';
    return 1;
  }
  return 0;
}

}  // namespace keyrank
