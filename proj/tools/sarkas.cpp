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


// sarkas: command-line front end.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sarkas/evaluation.hpp"
#include "sarkas/pipeline.hpp"
#include "sarkas/resources.hpp"
#include "sarkas/synthetic.hpp"

namespace {

using namespace sarkas;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct ResourceFlags {
  std::string lexicon;
  std::string informal_dict;
  std::string negations;
  std::string interjections;
  std::string question_words;
  std::string context_overrides;
  std::string affix_overrides;

  void attach(CLI::App* cmd, bool with_lexicon) {
    if (with_lexicon) {
      cmd->add_option("--lexicon", lexicon, "Lexicon TSV (term, pos, neg)")->check(CLI::ExistingFile);
    }
    cmd->add_option("--informal-dict", informal_dict, "Informal -> formal TSV")->check(CLI::ExistingFile);
    cmd->add_option("--negations", negations, "Negation word list")->check(CLI::ExistingFile);
    cmd->add_option("--interjections", interjections, "Interjection word list")->check(CLI::ExistingFile);
    cmd->add_option("--question-words", question_words, "Question word list")->check(CLI::ExistingFile);
    cmd->add_option("--context-overrides", context_overrides, "Context override TSV")->check(CLI::ExistingFile);
    cmd->add_option("--affix-overrides", affix_overrides, "Affix override TSV")->check(CLI::ExistingFile);
  }

  // Unset flags fall back to the bundled lists.
  AuxLists aux() const {
    AuxLists a = bundled::aux_lists();
    if (!informal_dict.empty()) {
      a.informal_dict = parse_informal_dict(io::read_file(informal_dict), informal_dict);
      a.warnings = check_informal_fixed_points(a.informal_dict);
    }
    if (!negations.empty()) a.negations = parse_word_list(io::read_file(negations), negations);
    if (!interjections.empty()) {
      a.interjections = parse_word_list(io::read_file(interjections), interjections);
    }
    if (!question_words.empty()) {
      a.question_words = parse_word_list(io::read_file(question_words), question_words);
    }
    if (!context_overrides.empty()) {
      a.context_overrides =
          parse_context_overrides(io::read_file(context_overrides), context_overrides);
    }
    if (!affix_overrides.empty()) {
      a.affix_overrides = parse_affix_overrides(io::read_file(affix_overrides), affix_overrides);
    }
    for (const auto& w : a.warnings) std::cerr << "warning: " << w << '\n';
    return a;
  }

  SentimentLexicon lex() const {
    return lexicon.empty() ? bundled::lexicon() : load_lexicon(lexicon);
  }
};

struct ConfigFlags {
  std::string mode = "score";
  std::string method = "direct";
  std::string algorithm = "nb";
  std::string stage2_algorithm;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "Unigram encoding")
        ->check(CLI::IsMember({"lexical", "score"}))
        ->capture_default_str();
    cmd->add_option("--method", method, "Stage-1 method")
        ->check(CLI::IsMember({"direct", "leveled"}))
        ->capture_default_str();
    cmd->add_option("--algorithm", algorithm, "Learner for both stages")
        ->check(CLI::IsMember({"nb", "maxent", "svm"}))
        ->capture_default_str();
  }

  PipelineConfig config(std::uint64_t seed) const {
    PipelineConfig c;
    c.feature_mode = *parse_mode(mode);
    c.stage1_method = *parse_method(method);
    c.stage1_algorithm = *parse_algorithm(algorithm);
    c.stage2_algorithm = c.stage1_algorithm;
    c.seed = seed;
    return c;
  }
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  return io::read_file(path);
}

std::string percent(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << 100.0 * x << '%';
  return s.str();
}

std::string metrics_text(const Metrics& m) {
  std::ostringstream out;
  out << "accuracy " << percent(m.accuracy) << " (" << m.total << " documents)\n\n";
  out << std::left << std::setw(8) << "class" << std::right << std::setw(11) << "precision"
      << std::setw(9) << "recall" << std::setw(9) << "f1" << std::setw(9) << "support\n";
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    out << std::left << std::setw(8) << m.classes[c] << std::right << std::setw(11)
        << percent(m.precision[c]) << std::setw(9) << percent(m.recall[c]) << std::setw(9)
        << percent(m.f1[c]) << std::setw(8) << m.support[c] << '\n';
  }
  out << "\nconfusion (rows gold, columns predicted)\n" << std::setw(8) << "";
  for (const auto& c : m.classes) out << std::setw(6) << c;
  out << '\n';
  for (std::size_t g = 0; g < m.classes.size(); ++g) {
    out << std::left << std::setw(8) << m.classes[g] << std::right;
    for (std::size_t p = 0; p < m.classes.size(); ++p) out << std::setw(6) << m.confusion[g][p];
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage sentiment and sarcasm classification for Indonesian social media text"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sarkas 1.0.0");

  std::uint64_t seed = 42;
  std::size_t jobs = 1;
  bool as_json = false;

  // normalize
  ResourceFlags norm_res;
  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize text lines from stdin");
  norm_res.attach(normalize_cmd, false);
  normalize_cmd->add_option("--seed", seed, "Random seed (unused, accepted for uniformity)");

  // build-lexicon
  std::string raw_path, lex_out;
  auto* build_cmd = app.add_subcommand("build-lexicon", "Average translated lexicon rows");
  build_cmd->add_option("input", raw_path, "Raw TSV: term, pos, neg per translation")
      ->required()
      ->check(CLI::ExistingFile);
  build_cmd->add_option("-o,--output", lex_out, "Output lexicon TSV")->required();

  // train
  ResourceFlags train_res;
  ConfigFlags train_cfg;
  std::string train_corpus, bundle_out;
  auto* train_cmd = app.add_subcommand("train", "Train a pipeline bundle");
  train_cmd->add_option("corpus", train_corpus, "Training corpus (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  train_cmd->add_option("-o,--output", bundle_out, "Bundle directory")->required();
  train_res.attach(train_cmd, true);
  train_cfg.attach(train_cmd);
  train_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

  // predict
  std::string bundle_in, predict_in;
  auto* predict_cmd = app.add_subcommand("predict", "Classify documents with a bundle");
  predict_cmd->add_option("--model", bundle_in, "Bundle directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  predict_cmd->add_option("input", predict_in, "JSONL documents, '-' for stdin");
  predict_cmd->add_option("--seed", seed, "Random seed (prediction is deterministic)");

  // evaluate
  std::string eval_bundle, eval_corpus;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a bundle on a labeled corpus");
  evaluate_cmd->add_option("--model", eval_bundle, "Bundle directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  evaluate_cmd->add_option("corpus", eval_corpus, "Labeled test corpus (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd->add_flag("--json", as_json, "Emit JSON");
  evaluate_cmd->add_option("--seed", seed, "Random seed (evaluation is deterministic)");

  // experiment
  ResourceFlags exp_res;
  ConfigFlags exp_cfg;
  std::string experiment_name, exp_train, exp_test;
  bool as_tsv = false;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run a comparison experiment");
  experiment_cmd->add_option("name", experiment_name, "score, method or sarcasm")
      ->required()
      ->check(CLI::IsMember({"score", "method", "sarcasm"}));
  experiment_cmd->add_option("--train", exp_train, "Training corpus (default: synthetic)")
      ->check(CLI::ExistingFile);
  experiment_cmd->add_option("--test", exp_test, "Test corpus (default: synthetic)")
      ->check(CLI::ExistingFile);
  exp_res.attach(experiment_cmd, true);
  exp_cfg.attach(experiment_cmd);
  experiment_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  experiment_cmd->add_option("--jobs", jobs, "Cells trained in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* json_opt = experiment_cmd->add_flag("--json", as_json, "Emit JSON");
  experiment_cmd->add_flag("--tsv", as_tsv, "Emit TSV")->excludes(json_opt);

  // gen-corpus
  std::string gen_out, resources_dir, gen_split = "train";
  std::optional<std::size_t> n_neutral, n_positive, n_negative;
  std::optional<double> sarcasm_rate;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "Generate a synthetic corpus");
  gen_cmd->add_option("--split", gen_split, "Preset shape")
      ->check(CLI::IsMember({"train", "test"}))
      ->capture_default_str();
  gen_cmd->add_option("--neutral", n_neutral, "Neutral document count");
  gen_cmd->add_option("--positive", n_positive, "Positive document count");
  gen_cmd->add_option("--negative", n_negative, "Negative document count");
  gen_cmd->add_option("--sarcasm-rate", sarcasm_rate, "Share of positives that are sarcastic")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-o,--output", gen_out, "Output JSONL (default stdout)");
  gen_cmd->add_option("--resources-dir", resources_dir,
                      "Also write the bundled lexicon and word lists here");
  gen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (normalize_cmd->parsed()) {
      const AuxLists aux = norm_res.aux();
      std::string line;
      while (std::getline(std::cin, line)) {
        std::cout << text::join(normalize(line, aux), " ") << '\n';
      }
    } else if (build_cmd->parsed()) {
      const auto rows = parse_lexicon_rows(io::read_file(raw_path), raw_path);
      const auto lex = merge_translations(rows, raw_path);
      save_lexicon(lex, lex_out);
      std::cerr << "merged " << rows.size() << " rows into " << lex.size() << " terms\n";
    } else if (train_cmd->parsed()) {
      const auto corpus = load_corpus(train_corpus);
      const auto pipe =
          train_pipeline(corpus, train_res.lex(), train_res.aux(), train_cfg.config(seed));
      save_pipeline(pipe, bundle_out);
      const auto& s = pipe.summary();
      std::cerr << "trained on " << corpus.size() << " documents (stage 1: "
                << s.stage1_examples << ", sarcasm: " << s.sarcasm_examples << ") -> "
                << bundle_out << '\n';
    } else if (predict_cmd->parsed()) {
      const auto pipe = load_pipeline(bundle_in);
      const std::string source = predict_in.empty() ? "<stdin>" : predict_in;
      const auto docs = parse_corpus(read_input(predict_in), source);
      for (const auto& d : docs) {
        auto out = pipe.classify(d).to_json();
        out["text"] = d.text;
        out["topic"] = d.topic ? nlohmann::json(*d.topic) : nlohmann::json(nullptr);
        std::cout << out.dump() << '\n';
      }
    } else if (evaluate_cmd->parsed()) {
      const auto pipe = load_pipeline(eval_bundle);
      const auto m = evaluate(pipe, load_corpus(eval_corpus));
      if (as_json) {
        std::cout << m.to_json().dump(2) << '\n';
      } else {
        std::cout << metrics_text(m);
      }
    } else if (experiment_cmd->parsed()) {
      if (exp_train.empty() != exp_test.empty()) {
        std::cerr << "error: --train and --test go together\n";
        return kExitUsage;
      }
      ExperimentData data = exp_train.empty()
                                ? synthetic_benchmark(seed)
                                : ExperimentData{load_corpus(exp_train), load_corpus(exp_test)};
      ExperimentOptions options;
      options.base = exp_cfg.config(seed);
      options.jobs = jobs;
      options.lexicon = std::make_shared<const SentimentLexicon>(exp_res.lex());
      options.aux = std::make_shared<const AuxLists>(exp_res.aux());
      ExperimentReport report;
      if (experiment_name == "score") {
        report = experiment_sentiment_score(data, options, seed);
      } else if (experiment_name == "method") {
        report = experiment_method(data, options, seed);
      } else {
        report = experiment_sarcasm(data, options, seed);
      }
      if (as_json) {
        std::cout << report.to_json().dump(2) << '\n';
      } else if (as_tsv) {
        std::cout << report.to_tsv();
      } else {
        std::cout << report.to_text();
      }
    } else if (gen_cmd->parsed()) {
      CorpusSpec spec = gen_split == "test" ? CorpusSpec::testing() : CorpusSpec::training();
      if (n_neutral) spec.neutral = *n_neutral;
      if (n_positive) spec.positive = *n_positive;
      if (n_negative) spec.negative = *n_negative;
      if (sarcasm_rate) spec.sarcasm_rate = *sarcasm_rate;
      const auto corpus = generate_synthetic_corpus(spec, derive_seed(seed, spec.tag));
      const std::string content = serialize_corpus(corpus.documents);
      if (gen_out.empty()) {
        std::cout << content;
      } else {
        io::write_file(gen_out, content);
      }
      if (!resources_dir.empty()) {
        save_resources(bundled::lexicon(), bundled::aux_lists(), resources_dir);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
