// Copyright 2026 The Sarkas Authors
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

// Metrics, stratified splitting and the three comparative experiments:
// lexical vs scored unigrams, direct vs leveled stage 1, and unigram-only vs
// augmented sarcasm features.

#ifndef SARKAS_EVALUATION_HPP_
#define SARKAS_EVALUATION_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "sarkas/common.hpp"
#include "sarkas/document.hpp"
#include "sarkas/learners.hpp"
#include "sarkas/pipeline.hpp"
#include "sarkas/synthetic.hpp"

namespace sarkas {

struct Metrics {
  std::vector<std::string> classes;
  // confusion[gold][predicted]
  std::vector<std::vector<std::size_t>> confusion;
  std::size_t total = 0;
  double accuracy = 0.0;
  std::vector<std::size_t> support;
  std::vector<double> precision;
  std::vector<double> recall;
  std::vector<double> f1;

  nlohmann::json to_json() const {
    nlohmann::json per_class = nlohmann::json::object();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      per_class[classes[c]] = {{"precision", precision[c]},
                               {"recall", recall[c]},
                               {"f1", f1[c]},
                               {"support", support[c]}};
    }
    return {{"accuracy", accuracy},
            {"total", total},
            {"classes", classes},
            {"confusion", confusion},
            {"per_class", per_class}};
  }
};

// Precision of a never-predicted class and F1 with p + r == 0 are 0.
inline Metrics compute_metrics(std::span<const std::size_t> gold,
                               std::span<const std::size_t> predicted,
                               const std::vector<std::string>& classes) {
  if (gold.size() != predicted.size()) {
    throw Error("metrics: gold and predicted lengths differ");
  }
  const std::size_t k = classes.size();
  Metrics m;
  m.classes = classes;
  m.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] >= k || predicted[i] >= k) throw Error("metrics: label out of range");
    ++m.confusion[gold[i]][predicted[i]];
  }
  m.total = gold.size();
  std::size_t correct = 0;
  m.support.assign(k, 0);
  m.precision.assign(k, 0.0);
  m.recall.assign(k, 0.0);
  m.f1.assign(k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    correct += m.confusion[c][c];
    std::size_t predicted_c = 0;
    for (std::size_t g = 0; g < k; ++g) {
      m.support[c] += m.confusion[c][g];
      predicted_c += m.confusion[g][c];
    }
    const double tp = static_cast<double>(m.confusion[c][c]);
    if (predicted_c) m.precision[c] = tp / static_cast<double>(predicted_c);
    if (m.support[c]) m.recall[c] = tp / static_cast<double>(m.support[c]);
    if (m.precision[c] + m.recall[c] > 0.0) {
      m.f1[c] = 2.0 * m.precision[c] * m.recall[c] / (m.precision[c] + m.recall[c]);
    }
  }
  m.accuracy = m.total ? static_cast<double>(correct) / static_cast<double>(m.total) : 0.0;
  return m;
}

// Pipeline final labels against gold final labels (sarcastic positives are
// gold negative).
inline Metrics evaluate(const Pipeline& pipe, std::span<const Document> test) {
  std::vector<std::size_t> gold, pred;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const auto g = gold_final_label(test[i]);
    if (!g) throw Error(describe(test[i], i) + " has no sentiment label");
    if (*test[i].sentiment == Sentiment::kPositive && !test[i].sarcasm) {
      throw Error(describe(test[i], i) + " is positive but has no sarcasm label");
    }
    gold.push_back(static_cast<std::size_t>(*g));
    pred.push_back(static_cast<std::size_t>(pipe.classify(test[i]).final_label));
  }
  return compute_metrics(gold, pred, stage::sentiment_classes());
}

inline Metrics evaluate(const Model& model, const Dataset& data) {
  std::vector<std::size_t> pred;
  pred.reserve(data.size());
  for (const auto& v : data.vectors) pred.push_back(predict(model, v));
  return compute_metrics(data.labels, pred, model.classes);
}

// Stratified by sentiment label (unlabeled documents form their own
// stratum). Each stratum contributes round(fraction * size) documents to
// the training side; both sides keep corpus order.
inline std::pair<std::vector<Document>, std::vector<Document>> split(
    std::span<const Document> corpus, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction >= 0.0 && train_fraction <= 1.0)) {
    throw Error("train fraction must be in [0,1]");
  }
  std::map<int, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const int key = corpus[i].sentiment ? static_cast<int>(*corpus[i].sentiment) : -1;
    strata[key].push_back(i);
  }
  std::vector<bool> to_train(corpus.size(), false);
  const Rng root(seed);
  for (auto& [key, members] : strata) {
    Rng rng = root.split(static_cast<std::uint64_t>(key + 1));
    rng.shuffle(members);
    const auto n = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(members.size())));
    for (std::size_t j = 0; j < n; ++j) to_train[members[j]] = true;
  }
  std::pair<std::vector<Document>, std::vector<Document>> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    (to_train[i] ? out.first : out.second).push_back(corpus[i]);
  }
  return out;
}

struct ExperimentData {
  std::vector<Document> train;
  std::vector<Document> test;
};

// Default benchmark: a 502/250/228 training corpus and a 200/60/40 test
// corpus from the bundled generator.
inline ExperimentData synthetic_benchmark(std::uint64_t seed = 42) {
  return {generate_synthetic_corpus(CorpusSpec::training(), derive_seed(seed, "train"))
              .documents,
          generate_synthetic_corpus(CorpusSpec::testing(), derive_seed(seed, "test"))
              .documents};
}

struct ReportCell {
  std::string algorithm;
  std::string condition;
  Metrics metrics;
};

struct ExperimentReport {
  std::string name;
  std::string title;
  std::vector<std::string> algorithms;
  std::vector<std::string> conditions;
  // One per (algorithm, condition), algorithm-major.
  std::vector<ReportCell> cells;
  // Secondary measurements, e.g. leveled sub-classifiers.
  std::vector<ReportCell> sub_cells;
  std::vector<std::string> notes;
  nlohmann::json config;
  std::uint64_t seed = 0;

  const Metrics& metrics(std::string_view algorithm, std::string_view condition,
                         bool sub = false) const {
    for (const auto& c : sub ? sub_cells : cells) {
      if (c.algorithm == algorithm && c.condition == condition) return c.metrics;
    }
    throw Error("report has no cell " + std::string(algorithm) + " / " +
                std::string(condition));
  }

  double accuracy(std::string_view algorithm, std::string_view condition,
                  bool sub = false) const {
    return metrics(algorithm, condition, sub).accuracy;
  }

  nlohmann::json to_json() const {
    const auto dump_cells = [](const std::vector<ReportCell>& cs) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : cs) {
        arr.push_back({{"algorithm", c.algorithm},
                       {"condition", c.condition},
                       {"metrics", c.metrics.to_json()}});
      }
      return arr;
    };
    return {{"experiment", name}, {"title", title},
            {"algorithms", algorithms}, {"conditions", conditions},
            {"cells", dump_cells(cells)}, {"sub_cells", dump_cells(sub_cells)},
            {"notes", notes}, {"config", config}, {"seed", seed}};
  }

  // experiment, kind, algorithm, condition, accuracy, correct, total
  std::string to_tsv() const {
    std::ostringstream out;
    out << "experiment\tkind\talgorithm\tcondition\taccuracy\tcorrect\ttotal\n";
    const auto rows = [&](const std::vector<ReportCell>& cs, const char* kind) {
      for (const auto& c : cs) {
        std::size_t correct = 0;
        for (std::size_t k = 0; k < c.metrics.classes.size(); ++k) {
          correct += c.metrics.confusion[k][k];
        }
        out << name << '\t' << kind << '\t' << c.algorithm << '\t' << c.condition << '\t'
            << text::format_double(c.metrics.accuracy) << '\t' << correct << '\t'
            << c.metrics.total << '\n';
      }
    };
    rows(cells, "cell");
    rows(sub_cells, "sub");
    return out.str();
  }

  // Accuracy table in percent, one row per algorithm.
  std::string to_text() const {
    std::ostringstream out;
    out << title << "\n\n";
    std::size_t first = 24;
    std::vector<std::size_t> widths;
    for (const auto& c : conditions) widths.push_back(std::max<std::size_t>(c.size(), 8) + 2);
    out << std::left << std::setw(static_cast<int>(first)) << "Algorithm";
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      out << std::right << std::setw(static_cast<int>(widths[i])) << conditions[i];
    }
    out << '\n';
    for (const auto& a : algorithms) {
      const auto algo = parse_algorithm(a);
      out << std::left << std::setw(static_cast<int>(first))
          << (algo ? std::string(algorithm_title(*algo)) : a);
      for (std::size_t i = 0; i < conditions.size(); ++i) {
        std::ostringstream pct;
        pct << std::fixed << std::setprecision(1) << 100.0 * accuracy(a, conditions[i]) << '%';
        out << std::right << std::setw(static_cast<int>(widths[i])) << pct.str();
      }
      out << '\n';
    }
    if (!sub_cells.empty()) {
      out << '\n';
      for (const auto& c : sub_cells) {
        std::ostringstream pct;
        pct << std::fixed << std::setprecision(1) << 100.0 * c.metrics.accuracy << '%';
        out << "  " << std::left << std::setw(10) << c.algorithm << std::setw(34)
            << c.condition << std::right << std::setw(8) << pct.str() << "  (n="
            << c.metrics.total << ")\n";
      }
    }
    for (const auto& n : notes) out << "\n" << n;
    if (!notes.empty()) out << '\n';
    return out.str();
  }
};

namespace detail {

// Runs task(i) for i in [0, n) on up to `jobs` threads. Results are written
// by index, so output order never depends on scheduling.
template <typename T>
std::vector<T> run_cells(std::size_t n, std::size_t jobs,
                         const std::function<T(std::size_t)>& task) {
  std::vector<T> results(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = task(i);
    return results;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr failure;
  const auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= n || failure) return;
        i = next++;
      }
      try {
        T r = task(i);
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < std::min(jobs, n); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

inline std::optional<std::string_view> topic_of(const Document& d) {
  if (d.topic) return *d.topic;
  return std::nullopt;
}

inline void require_labels(std::span<const Document> docs, const char* which) {
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!docs[i].sentiment) {
      throw Error(std::string(which) + " " + describe(docs[i], i) +
                  " has no sentiment label");
    }
  }
}

// Stage-1 accuracy of a trained pipeline against gold sentiment.
inline Metrics stage1_metrics(const Pipeline& pipe, std::span<const Document> test) {
  std::vector<std::size_t> gold, pred;
  for (const auto& d : test) {
    gold.push_back(static_cast<std::size_t>(*d.sentiment));
    pred.push_back(static_cast<std::size_t>(
        pipe.classify_stage1(pipe.normalize_text(d.text), topic_of(d))));
  }
  return compute_metrics(gold, pred, stage::sentiment_classes());
}

inline std::vector<std::string> algorithm_names() {
  std::vector<std::string> out;
  for (auto a : kAllAlgorithms) out.emplace_back(algorithm_name(a));
  return out;
}

inline PipelineConfig cell_config(const PipelineConfig& base, Algorithm a,
                                  std::uint64_t seed) {
  PipelineConfig c = base;
  c.stage1_algorithm = a;
  c.stage2_algorithm = a;
  c.seed = seed;
  return c;
}

}  // namespace detail

struct ExperimentOptions {
  PipelineConfig base;
  std::size_t jobs = 1;
  std::shared_ptr<const SentimentLexicon> lexicon;
  std::shared_ptr<const AuxLists> aux;

  static ExperimentOptions bundled_resources() {
    ExperimentOptions o;
    o.lexicon = std::make_shared<const SentimentLexicon>(bundled::lexicon());
    o.aux = std::make_shared<const AuxLists>(bundled::aux_lists());
    return o;
  }
};

namespace detail {

inline ExperimentReport report_skeleton(std::string name, std::string title,
                                        std::vector<std::string> conditions,
                                        const ExperimentOptions& options,
                                        std::uint64_t seed) {
  ExperimentReport r;
  r.name = std::move(name);
  r.title = std::move(title);
  r.algorithms = algorithm_names();
  r.conditions = std::move(conditions);
  r.config = options.base.to_json();
  r.config["seed"] = seed;
  r.seed = seed;
  return r;
}

inline void check_options(const ExperimentOptions& o) {
  if (!o.lexicon || !o.aux) throw Error("experiment needs a lexicon and aux lists");
}

}  // namespace detail

// Stage-1 three-way sentiment, direct method, with lexical
// presence vs lexicon-score unigrams, for each learner.
inline ExperimentReport experiment_sentiment_score(const ExperimentData& data,
                                                   const ExperimentOptions& options,
                                                   std::uint64_t seed) {
  detail::check_options(options);
  detail::require_labels(data.train, "training");
  detail::require_labels(data.test, "test");
  auto report = detail::report_skeleton(
      "score", "Stage-1 accuracy: lexical presence vs sentiment score",
      {"lexical", "score"}, options, seed);
  const std::vector<FeatureMode> modes = {FeatureMode::kLexical, FeatureMode::kScore};
  const auto metrics = detail::run_cells<Metrics>(
      kAllAlgorithms.size() * modes.size(), options.jobs, [&](std::size_t i) {
        auto config = detail::cell_config(options.base, kAllAlgorithms[i / modes.size()], seed);
        config.stage1_method = Stage1Method::kDirect;
        config.feature_mode = modes[i % modes.size()];
        const auto pipe = train_pipeline(data.train, options.lexicon, options.aux, config,
                                         TrainScope::kStage1Only);
        return detail::stage1_metrics(pipe, data.test);
      });
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    report.cells.push_back({report.algorithms[i / modes.size()],
                            report.conditions[i % modes.size()], metrics[i]});
  }
  return report;
}

// Sub-classifier rows of the method experiment.
namespace subcell {
// Gate verdict vs gold neutral/opinion over every test document.
inline constexpr std::string_view kGate = "opinion-vs-neutral";
// Three-way accuracy with the gate replaced by gold labels, over every test
// document, so end-to-end leveled accuracy cannot exceed it.
inline constexpr std::string_view kPolarity = "pos-vs-neg";
}  // namespace subcell

// Direct vs leveled stage 1 with identical features, plus the
// accuracy of each leveled sub-classifier.
inline ExperimentReport experiment_method(const ExperimentData& data,
                                          const ExperimentOptions& options,
                                          std::uint64_t seed) {
  detail::check_options(options);
  detail::require_labels(data.train, "training");
  detail::require_labels(data.test, "test");
  auto report = detail::report_skeleton(
      "method", "Stage-1 accuracy: leveled vs direct classification",
      {"leveled", "direct"}, options, seed);
  const std::vector<Stage1Method> methods = {Stage1Method::kLeveled, Stage1Method::kDirect};

  struct CellResult {
    Metrics end_to_end;
    std::vector<std::pair<std::string, Metrics>> subs;
    std::optional<Metrics> opinions_only;
  };
  const auto results = detail::run_cells<CellResult>(
      kAllAlgorithms.size() * methods.size(), options.jobs, [&](std::size_t i) {
        auto config = detail::cell_config(options.base, kAllAlgorithms[i / methods.size()], seed);
        config.stage1_method = methods[i % methods.size()];
        const auto pipe = train_pipeline(data.train, options.lexicon, options.aux, config,
                                         TrainScope::kStage1Only);
        CellResult r;
        r.end_to_end = detail::stage1_metrics(pipe, data.test);
        if (config.stage1_method != Stage1Method::kLeveled) return r;

        std::vector<std::size_t> gate_gold, gate_pred, oracle_gold, oracle_pred,
            pol_gold, pol_pred;
        for (const auto& d : data.test) {
          const auto tokens = pipe.normalize_text(d.text);
          const bool opinion = *d.sentiment != Sentiment::kNeutral;
          gate_gold.push_back(opinion ? 1 : 0);
          gate_pred.push_back(pipe.is_opinion(tokens, detail::topic_of(d)) ? 1 : 0);
          oracle_gold.push_back(static_cast<std::size_t>(*d.sentiment));
          if (!opinion) {
            oracle_pred.push_back(static_cast<std::size_t>(Sentiment::kNeutral));
            continue;
          }
          const bool positive = pipe.polarity_positive(tokens, detail::topic_of(d));
          const auto s = positive ? Sentiment::kPositive : Sentiment::kNegative;
          oracle_pred.push_back(static_cast<std::size_t>(s));
          pol_gold.push_back(*d.sentiment == Sentiment::kPositive ? 0 : 1);
          pol_pred.push_back(positive ? 0 : 1);
        }
        r.subs.emplace_back(subcell::kGate,
                            compute_metrics(gate_gold, gate_pred, stage::opinion_classes()));
        r.subs.emplace_back(subcell::kPolarity,
                            compute_metrics(oracle_gold, oracle_pred, stage::sentiment_classes()));
        r.opinions_only = compute_metrics(pol_gold, pol_pred, stage::polarity_classes());
        return r;
      });

  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& algo = report.algorithms[i / methods.size()];
    report.cells.push_back({algo, report.conditions[i % methods.size()], results[i].end_to_end});
    for (const auto& [cond, m] : results[i].subs) report.sub_cells.push_back({algo, cond, m});
  }
  for (std::size_t k = 0; k < report.algorithms.size(); ++k) {
    const auto& a = report.algorithms[k];
    const double gap = 100.0 * (report.accuracy(a, "direct") - report.accuracy(a, "leveled"));
    std::ostringstream note;
    note << std::fixed << std::setprecision(1) << a << ": direct - leveled = "
         << (gap >= 0 ? "+" : "") << gap << " points";
    if (const auto& m = results[k * methods.size()].opinions_only; m && m->total > 0) {
      note << "; polarity on gold opinion texts " << 100.0 * m->accuracy << "%";
    }
    report.notes.push_back(note.str());
  }
  return report;
}

inline constexpr std::string_view kUnigramOnly = "unigram";
inline constexpr std::string_view kAugmented = "unigram+negativity+interjection";

// Sarcasm detection on positive texts with unigram-only vs
// unigram + negativity + interjection features. "gold/" cells classify gold
// positive test documents; "predicted/" cells classify the documents stage 1
// calls positive, where a document that is not a gold positive counts as
// not sarcastic.
inline ExperimentReport experiment_sarcasm(const ExperimentData& data,
                                           const ExperimentOptions& options,
                                           std::uint64_t seed) {
  detail::check_options(options);
  detail::require_labels(data.train, "training");
  detail::require_labels(data.test, "test");
  const std::vector<FeatureGroups> feature_sets = {
      FeatureGroups{FeatureGroup::kUnigram}, kDefaultStage2Groups};
  const std::vector<std::string> set_names = {std::string(kUnigramOnly),
                                              std::string(kAugmented)};
  auto report = detail::report_skeleton(
      "sarcasm", "Sarcasm accuracy on positive texts: unigram vs augmented features",
      {"gold/" + set_names[0], "gold/" + set_names[1], "predicted/" + set_names[0],
       "predicted/" + set_names[1]},
      options, seed);

  const auto results = detail::run_cells<std::pair<Metrics, Metrics>>(
      kAllAlgorithms.size() * feature_sets.size(), options.jobs, [&](std::size_t i) {
        auto config =
            detail::cell_config(options.base, kAllAlgorithms[i / feature_sets.size()], seed);
        config.stage2_groups = feature_sets[i % feature_sets.size()];
        const auto pipe =
            train_pipeline(data.train, options.lexicon, options.aux, config, TrainScope::kFull);
        std::vector<std::size_t> gold_g, pred_g, gold_p, pred_p;
        for (const auto& d : data.test) {
          const auto tokens = pipe.normalize_text(d.text);
          const bool gold_positive = *d.sentiment == Sentiment::kPositive;
          const bool gold_sarcastic = gold_positive && d.sarcasm.value_or(false);
          std::optional<bool> verdict;
          if (gold_positive) {
            if (!d.sarcasm) throw Error("test positive document has no sarcasm label");
            verdict = pipe.classify_sarcasm(tokens, detail::topic_of(d));
            gold_g.push_back(gold_sarcastic ? 1 : 0);
            pred_g.push_back(*verdict ? 1 : 0);
          }
          if (pipe.classify_stage1(tokens, detail::topic_of(d)) == Sentiment::kPositive) {
            if (!verdict) verdict = pipe.classify_sarcasm(tokens, detail::topic_of(d));
            gold_p.push_back(gold_sarcastic ? 1 : 0);
            pred_p.push_back(*verdict ? 1 : 0);
          }
        }
        return std::pair{compute_metrics(gold_g, pred_g, stage::sarcasm_classes()),
                         compute_metrics(gold_p, pred_p, stage::sarcasm_classes())};
      });

  for (std::size_t a = 0; a < kAllAlgorithms.size(); ++a) {
    for (std::size_t f = 0; f < feature_sets.size(); ++f) {
      report.cells.push_back(
          {report.algorithms[a], "gold/" + set_names[f], results[a * 2 + f].first});
    }
    for (std::size_t f = 0; f < feature_sets.size(); ++f) {
      report.cells.push_back(
          {report.algorithms[a], "predicted/" + set_names[f], results[a * 2 + f].second});
    }
  }
  return report;
}

}  // namespace sarkas

#endif  // SARKAS_EVALUATION_HPP_
