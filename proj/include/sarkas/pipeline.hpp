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

// Two-step classification flow. Stage 1 assigns positive, negative or
// neutral, either directly or through a neutral/opinion gate followed by a
// positive/negative model. Texts that stage 1 calls positive then go
// through the sarcasm model; sarcastic positives are reported as negative
// with the sarcasm flag kept.

#ifndef SARKAS_PIPELINE_HPP_
#define SARKAS_PIPELINE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sarkas/common.hpp"
#include "sarkas/document.hpp"
#include "sarkas/features.hpp"
#include "sarkas/learners.hpp"
#include "sarkas/lexicon.hpp"
#include "sarkas/normalizer.hpp"

namespace sarkas {

enum class Stage1Method { kDirect, kLeveled };

inline std::string_view method_name(Stage1Method m) {
  return m == Stage1Method::kDirect ? "direct" : "leveled";
}

inline std::optional<Stage1Method> parse_method(std::string_view s) {
  if (s == "direct") return Stage1Method::kDirect;
  if (s == "leveled") return Stage1Method::kLeveled;
  return std::nullopt;
}

inline constexpr FeatureGroups kDefaultStage1Groups{FeatureGroup::kUnigram,
                                                    FeatureGroup::kQuestion};
inline constexpr FeatureGroups kDefaultStage2Groups{
    FeatureGroup::kUnigram, FeatureGroup::kNegativity,
    FeatureGroup::kInterjection};

struct PipelineConfig {
  Stage1Method stage1_method = Stage1Method::kDirect;
  Algorithm stage1_algorithm = Algorithm::kNaiveBayes;
  Algorithm stage2_algorithm = Algorithm::kNaiveBayes;
  FeatureMode feature_mode = FeatureMode::kScore;
  FeatureGroups stage1_groups = kDefaultStage1Groups;
  FeatureGroups stage2_groups = kDefaultStage2Groups;
  FeatureOptions features;
  NormalizerOptions normalizer;
  Hyperparams hyperparams;
  std::uint64_t seed = 42;

  void validate() const {
    if (!stage2_groups.has(FeatureGroup::kUnigram)) {
      throw Error("stage 2 feature groups must include unigram");
    }
    if (features.negation_window == 0) {
      throw Error("negation window must be at least 1");
    }
    if (normalizer.vowel_run_threshold < 2) {
      throw Error("vowel run threshold must be at least 2");
    }
  }

  nlohmann::json to_json() const {
    return {
        {"stage1_method", std::string(method_name(stage1_method))},
        {"stage1_algorithm", std::string(algorithm_name(stage1_algorithm))},
        {"stage2_algorithm", std::string(algorithm_name(stage2_algorithm))},
        {"feature_mode", std::string(mode_name(feature_mode))},
        {"stage1_groups", stage1_groups.names()},
        {"stage2_groups", stage2_groups.names()},
        {"negation_window", features.negation_window},
        {"binary_occurrence", features.binary_occurrence},
        {"unknown_topic_policy",
         features.unknown_topic == UnknownTopicPolicy::kStrict ? "strict" : "lenient"},
        {"unknown_topic_negativity", features.unknown_topic_negativity},
        {"vowel_run_threshold", normalizer.vowel_run_threshold},
        {"hyperparameters", hyperparams.to_json()},
        {"seed", seed},
    };
  }

  static PipelineConfig from_json(const nlohmann::json& j) {
    PipelineConfig c;
    const auto need = [](auto opt, const char* what) {
      if (!opt) throw Error(std::string("pipeline config: invalid ") + what);
      return *opt;
    };
    c.stage1_method = need(parse_method(j.at("stage1_method").get<std::string>()),
                           "stage1_method");
    c.stage1_algorithm = need(
        parse_algorithm(j.at("stage1_algorithm").get<std::string>()), "stage1_algorithm");
    c.stage2_algorithm = need(
        parse_algorithm(j.at("stage2_algorithm").get<std::string>()), "stage2_algorithm");
    c.feature_mode =
        need(parse_mode(j.at("feature_mode").get<std::string>()), "feature_mode");
    c.stage1_groups =
        FeatureGroups::from_names(j.at("stage1_groups").get<std::vector<std::string>>());
    c.stage2_groups =
        FeatureGroups::from_names(j.at("stage2_groups").get<std::vector<std::string>>());
    c.features.negation_window = j.at("negation_window").get<std::size_t>();
    c.features.binary_occurrence = j.at("binary_occurrence").get<bool>();
    const auto policy = j.at("unknown_topic_policy").get<std::string>();
    if (policy != "strict" && policy != "lenient") {
      throw Error("pipeline config: invalid unknown_topic_policy");
    }
    c.features.unknown_topic =
        policy == "strict" ? UnknownTopicPolicy::kStrict : UnknownTopicPolicy::kLenient;
    c.features.unknown_topic_negativity = j.at("unknown_topic_negativity").get<double>();
    c.normalizer.vowel_run_threshold = j.at("vowel_run_threshold").get<std::size_t>();
    c.hyperparams = Hyperparams::from_json(j.at("hyperparameters"));
    c.seed = j.at("seed").get<std::uint64_t>();
    c.validate();
    return c;
  }
};

// Class distribution produced by one model invocation.
struct StageScores {
  std::string stage;
  std::vector<std::string> classes;
  std::vector<double> probabilities;

  friend bool operator==(const StageScores&, const StageScores&) = default;
};

struct Prediction {
  Sentiment sentiment = Sentiment::kNeutral;
  // Present exactly when `sentiment` is positive.
  std::optional<bool> sarcasm;
  Sentiment final_label = Sentiment::kNeutral;
  std::vector<StageScores> stage_scores;

  const StageScores* stage(std::string_view name) const {
    for (const auto& s : stage_scores) {
      if (s.stage == name) return &s;
    }
    return nullptr;
  }

  nlohmann::json to_json() const {
    nlohmann::json scores = nlohmann::json::object();
    for (const auto& s : stage_scores) {
      nlohmann::json dist = nlohmann::json::object();
      for (std::size_t c = 0; c < s.classes.size(); ++c) {
        dist[s.classes[c]] = s.probabilities[c];
      }
      scores[s.stage] = dist;
    }
    return {{"sentiment", std::string(sentiment_code(sentiment))},
            {"sarcasm", sarcasm ? nlohmann::json(*sarcasm) : nlohmann::json(nullptr)},
            {"final_label", std::string(sentiment_code(final_label))},
            {"stage_scores", scores}};
  }

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// Stage and class names.
namespace stage {
inline constexpr std::string_view kSentiment = "sentiment";
inline constexpr std::string_view kOpinion = "opinion";
inline constexpr std::string_view kPolarity = "polarity";
inline constexpr std::string_view kSarcasm = "sarcasm";

inline const std::vector<std::string>& sentiment_classes() {
  static const std::vector<std::string> c = {"neu", "pos", "neg"};
  return c;
}
inline const std::vector<std::string>& opinion_classes() {
  static const std::vector<std::string> c = {"neutral", "opinion"};
  return c;
}
inline const std::vector<std::string>& polarity_classes() {
  static const std::vector<std::string> c = {"pos", "neg"};
  return c;
}
inline const std::vector<std::string>& sarcasm_classes() {
  static const std::vector<std::string> c = {"not_sarcastic", "sarcastic"};
  return c;
}
}  // namespace stage

// Which models train_pipeline fits. Partial pipelines throw when asked to
// run a stage they do not have.
enum class TrainScope { kFull, kStage1Only, kSarcasmOnly };

// Example counts per trained model, for inspection.
struct TrainingSummary {
  std::size_t stage1_examples = 0;
  std::size_t opinion_examples = 0;
  std::size_t polarity_examples = 0;
  std::size_t sarcasm_examples = 0;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  return Rng(seed).split(label).next();
}

class Pipeline {
 public:
  const PipelineConfig& config() const { return config_; }
  const SentimentLexicon& lexicon() const { return *lexicon_; }
  const AuxLists& aux() const { return *aux_; }
  const TopicNegativityRegistry& registry() const { return registry_; }
  const TrainingSummary& summary() const { return summary_; }
  const SpacePtr& stage1_space() const { return stage1_space_; }
  const SpacePtr& stage2_space() const { return stage2_space_; }

  const std::optional<Model>& sentiment_model() const { return sentiment_model_; }
  const std::optional<Model>& opinion_model() const { return opinion_model_; }
  const std::optional<Model>& polarity_model() const { return polarity_model_; }
  const std::optional<Model>& sarcasm_model() const { return sarcasm_model_; }

  TokenSeq normalize_text(std::string_view text) const {
    return normalize(text, *aux_, config_.normalizer);
  }

  FeatureVector stage1_vector(const TokenSeq& tokens,
                              std::optional<std::string_view> topic) const {
    return vectorize(topic, tokens, stage1_space_, *lexicon_, *aux_, registry_,
                     config_.features);
  }

  FeatureVector stage2_vector(const TokenSeq& tokens,
                              std::optional<std::string_view> topic) const {
    return vectorize(topic, tokens, stage2_space_, *lexicon_, *aux_, registry_,
                     config_.features);
  }

  // Stage-1 sentiment; appends the distributions of every model it ran.
  Sentiment classify_stage1(const TokenSeq& tokens,
                            std::optional<std::string_view> topic,
                            std::vector<StageScores>* scores = nullptr) const {
    const auto v = stage1_vector(tokens, topic);
    if (config_.stage1_method == Stage1Method::kDirect) {
      if (!sentiment_model_) throw Error("pipeline has no stage-1 model");
      const auto dist = predict_dist(*sentiment_model_, v);
      if (scores) scores->push_back({std::string(stage::kSentiment),
                                     stage::sentiment_classes(), dist});
      return kAllSentiments[predict(*sentiment_model_, v)];
    }
    return classify_leveled_stage1(v, scores);
  }

  // Neutral/opinion gate; the polarity model only runs on opinions.
  Sentiment classify_leveled_stage1(const FeatureVector& v,
                                    std::vector<StageScores>* scores = nullptr) const {
    if (!opinion_model_ || !polarity_model_) {
      throw Error("pipeline was not trained with the leveled method");
    }
    if (scores) scores->push_back({std::string(stage::kOpinion),
                                   stage::opinion_classes(),
                                   predict_dist(*opinion_model_, v)});
    if (predict(*opinion_model_, v) == 0) return Sentiment::kNeutral;
    if (scores) scores->push_back({std::string(stage::kPolarity),
                                   stage::polarity_classes(),
                                   predict_dist(*polarity_model_, v)});
    return predict(*polarity_model_, v) == 0 ? Sentiment::kPositive
                                             : Sentiment::kNegative;
  }

  // Gate verdict alone: true for opinion.
  bool is_opinion(const TokenSeq& tokens, std::optional<std::string_view> topic) const {
    if (!opinion_model_) throw Error("pipeline has no opinion model");
    return predict(*opinion_model_, stage1_vector(tokens, topic)) == 1;
  }

  // Polarity model alone: true for positive.
  bool polarity_positive(const TokenSeq& tokens,
                         std::optional<std::string_view> topic) const {
    if (!polarity_model_) throw Error("pipeline has no polarity model");
    return predict(*polarity_model_, stage1_vector(tokens, topic)) == 0;
  }

  bool classify_sarcasm(const TokenSeq& tokens, std::optional<std::string_view> topic,
                        std::vector<StageScores>* scores = nullptr) const {
    if (!sarcasm_model_) throw Error("pipeline has no sarcasm model");
    const auto v = stage2_vector(tokens, topic);
    if (scores) scores->push_back({std::string(stage::kSarcasm),
                                   stage::sarcasm_classes(),
                                   predict_dist(*sarcasm_model_, v)});
    return predict(*sarcasm_model_, v) == 1;
  }

  Prediction classify(std::string_view text,
                      std::optional<std::string_view> topic = std::nullopt) const {
    const auto tokens = normalize_text(text);
    Prediction p;
    p.sentiment = classify_stage1(tokens, topic, &p.stage_scores);
    p.final_label = p.sentiment;
    if (p.sentiment == Sentiment::kPositive) {
      p.sarcasm = classify_sarcasm(tokens, topic, &p.stage_scores);
      if (*p.sarcasm) p.final_label = Sentiment::kNegative;
    }
    return p;
  }

  Prediction classify(const Document& doc) const {
    std::optional<std::string_view> topic;
    if (doc.topic) topic = *doc.topic;
    return classify(doc.text, topic);
  }

 private:
  friend Pipeline train_pipeline(std::span<const Document>,
                                 std::shared_ptr<const SentimentLexicon>,
                                 std::shared_ptr<const AuxLists>,
                                 const PipelineConfig&, TrainScope);
  friend Pipeline load_pipeline(const std::string&);

  void build_spaces() {
    const auto vocab = FeatureSpace::resource_vocabulary(*lexicon_, *aux_);
    stage1_space_ = FeatureSpace::create(vocab, config_.feature_mode, config_.stage1_groups);
    stage2_space_ = FeatureSpace::create(vocab, config_.feature_mode, config_.stage2_groups);
  }

  PipelineConfig config_;
  std::shared_ptr<const SentimentLexicon> lexicon_;
  std::shared_ptr<const AuxLists> aux_;
  TopicNegativityRegistry registry_;
  SpacePtr stage1_space_;
  SpacePtr stage2_space_;
  std::optional<Model> sentiment_model_;
  std::optional<Model> opinion_model_;
  std::optional<Model> polarity_model_;
  std::optional<Model> sarcasm_model_;
  TrainingSummary summary_;
};

namespace detail {

inline Model train_stage(const Dataset& data, Algorithm algorithm,
                         const PipelineConfig& config, std::string_view name) {
  try {
    return train(data, algorithm, config.hyperparams, derive_seed(config.seed, name));
  } catch (const Error& e) {
    throw Error(std::string(name) + " model: " + e.what());
  }
}

}  // namespace detail

// Stage 1 learns from every document; the sarcasm model only from documents
// labeled positive. The negativity registry comes from the training corpus.
inline Pipeline train_pipeline(std::span<const Document> corpus,
                               std::shared_ptr<const SentimentLexicon> lexicon,
                               std::shared_ptr<const AuxLists> aux,
                               const PipelineConfig& config,
                               TrainScope scope = TrainScope::kFull) {
  config.validate();
  if (corpus.empty()) throw Error("training corpus is empty");
  const bool fit_stage1 = scope != TrainScope::kSarcasmOnly;
  const bool fit_sarcasm = scope != TrainScope::kStage1Only;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& doc = corpus[i];
    if (!doc.sentiment) throw Error(describe(doc, i) + " has no sentiment label");
    if (fit_sarcasm && *doc.sentiment == Sentiment::kPositive) {
      ++positives;
      if (!doc.sarcasm) {
        throw Error("stage 2: positive " + describe(doc, i) + " has no sarcasm label");
      }
    }
  }
  if (fit_sarcasm && positives == 0) {
    throw Error("stage 2: training corpus has no positive documents, "
                "the sarcasm model cannot be trained");
  }

  Pipeline p;
  p.config_ = config;
  p.lexicon_ = std::move(lexicon);
  p.aux_ = std::move(aux);
  p.build_spaces();
  const bool needs_registry = config.stage1_groups.has(FeatureGroup::kNegativity) ||
                              config.stage2_groups.has(FeatureGroup::kNegativity);
  if (needs_registry) p.registry_ = compute_negativity(corpus);

  std::vector<TokenSeq> tokens;
  tokens.reserve(corpus.size());
  for (const auto& doc : corpus) tokens.push_back(p.normalize_text(doc.text));
  const auto topic_of = [&](std::size_t i) -> std::optional<std::string_view> {
    if (corpus[i].topic) return *corpus[i].topic;
    return std::nullopt;
  };

  std::vector<FeatureVector> stage1;
  if (fit_stage1) {
    stage1.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      stage1.push_back(p.stage1_vector(tokens[i], topic_of(i)));
    }
  }

  if (!fit_stage1) {
    // stage 1 skipped
  } else if (config.stage1_method == Stage1Method::kDirect) {
    Dataset data{{}, {}, stage::sentiment_classes()};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      data.add(stage1[i], static_cast<std::size_t>(*corpus[i].sentiment));
    }
    p.summary_.stage1_examples = data.size();
    p.sentiment_model_ = detail::train_stage(data, config.stage1_algorithm, config,
                                             stage::kSentiment);
  } else {
    Dataset gate{{}, {}, stage::opinion_classes()};
    Dataset polarity{{}, {}, stage::polarity_classes()};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto s = *corpus[i].sentiment;
      gate.add(stage1[i], s == Sentiment::kNeutral ? 0 : 1);
      if (s != Sentiment::kNeutral) {
        polarity.add(stage1[i], s == Sentiment::kPositive ? 0 : 1);
      }
    }
    p.summary_.stage1_examples = gate.size();
    p.summary_.opinion_examples = gate.size();
    p.summary_.polarity_examples = polarity.size();
    p.opinion_model_ =
        detail::train_stage(gate, config.stage1_algorithm, config, stage::kOpinion);
    p.polarity_model_ =
        detail::train_stage(polarity, config.stage1_algorithm, config, stage::kPolarity);
  }

  if (!fit_sarcasm) return p;
  Dataset sarcasm{{}, {}, stage::sarcasm_classes()};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (*corpus[i].sentiment != Sentiment::kPositive) continue;
    sarcasm.add(p.stage2_vector(tokens[i], topic_of(i)), *corpus[i].sarcasm ? 1 : 0);
  }
  p.summary_.sarcasm_examples = sarcasm.size();
  p.sarcasm_model_ =
      detail::train_stage(sarcasm, config.stage2_algorithm, config, stage::kSarcasm);
  return p;
}

inline Pipeline train_pipeline(std::span<const Document> corpus,
                               const SentimentLexicon& lexicon, const AuxLists& aux,
                               const PipelineConfig& config,
                               TrainScope scope = TrainScope::kFull) {
  return train_pipeline(corpus, std::make_shared<const SentimentLexicon>(lexicon),
                        std::make_shared<const AuxLists>(aux), config, scope);
}

inline constexpr int kPipelineFormatVersion = 1;
inline constexpr std::string_view kPipelineMagic = "SARKAS-PIPELINE";

// Bundle layout:
//   manifest.json       magic, format version, config, file map
//   <stage>.model       one file per trained model
//   negativity.tsv      topic registry
//   resources/          lexicon and word lists the pipeline was trained with
inline void save_pipeline(const Pipeline& p, const std::string& dir) {
  namespace fs = std::filesystem;
  const bool direct = p.config().stage1_method == Stage1Method::kDirect;
  if (!p.sarcasm_model() || (direct && !p.sentiment_model()) ||
      (!direct && (!p.opinion_model() || !p.polarity_model()))) {
    throw Error("refusing to save a partially trained pipeline");
  }
  fs::create_directories(fs::path(dir) / "resources");
  nlohmann::json models = nlohmann::json::object();
  const auto write_model = [&](const std::optional<Model>& m, std::string_view name) {
    if (!m) return;
    const std::string file = std::string(name) + ".model";
    save_model(*m, (fs::path(dir) / file).string());
    models[std::string(name)] = file;
  };
  write_model(p.sentiment_model(), stage::kSentiment);
  write_model(p.opinion_model(), stage::kOpinion);
  write_model(p.polarity_model(), stage::kPolarity);
  write_model(p.sarcasm_model(), stage::kSarcasm);
  io::write_file((fs::path(dir) / "negativity.tsv").string(), p.registry().serialize());
  save_resources(p.lexicon(), p.aux(), (fs::path(dir) / "resources").string());

  const nlohmann::json manifest = {
      {"magic", std::string(kPipelineMagic)},
      {"format_version", kPipelineFormatVersion},
      {"config", p.config().to_json()},
      {"models", models},
      {"registry", "negativity.tsv"},
      {"resources", "resources"},
  };
  io::write_file((fs::path(dir) / "manifest.json").string(), manifest.dump(2) + "\n");
}

inline Pipeline load_pipeline(const std::string& dir) {
  namespace fs = std::filesystem;
  const std::string manifest_path = (fs::path(dir) / "manifest.json").string();
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(io::read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(manifest_path, 1, std::string("invalid manifest: ") + e.what());
  }
  if (manifest.value("magic", "") != kPipelineMagic) {
    throw Error(manifest_path + ": not a pipeline bundle");
  }
  const int version = manifest.value("format_version", -1);
  if (version != kPipelineFormatVersion) {
    throw Error(manifest_path + ": pipeline format version " + std::to_string(version) +
                " found, expected " + std::to_string(kPipelineFormatVersion));
  }
  Pipeline p;
  p.config_ = PipelineConfig::from_json(manifest.at("config"));
  const std::string res = (fs::path(dir) / manifest.at("resources").get<std::string>()).string();
  p.lexicon_ = std::make_shared<const SentimentLexicon>(
      load_lexicon((fs::path(res) / ResourceFiles::kLexicon).string()));
  p.aux_ = std::make_shared<const AuxLists>(load_aux_lists(resource_paths(res)));
  p.build_spaces();
  const std::string reg_path =
      (fs::path(dir) / manifest.at("registry").get<std::string>()).string();
  p.registry_ = TopicNegativityRegistry::parse(io::read_file(reg_path), reg_path);

  const auto& models = manifest.at("models");
  const auto read_model = [&](std::string_view name, const SpacePtr& space) {
    std::optional<Model> m;
    const auto it = models.find(std::string(name));
    if (it == models.end()) return m;
    m = load_model((fs::path(dir) / it->get<std::string>()).string());
    if (!same_space(m->space, space)) {
      throw Error(std::string(name) + " model feature space does not match the config");
    }
    m->space = space;
    return m;
  };
  p.sentiment_model_ = read_model(stage::kSentiment, p.stage1_space_);
  p.opinion_model_ = read_model(stage::kOpinion, p.stage1_space_);
  p.polarity_model_ = read_model(stage::kPolarity, p.stage1_space_);
  p.sarcasm_model_ = read_model(stage::kSarcasm, p.stage2_space_);
  const bool direct = p.config_.stage1_method == Stage1Method::kDirect;
  if (!p.sarcasm_model_ || (direct && !p.sentiment_model_) ||
      (!direct && (!p.opinion_model_ || !p.polarity_model_))) {
    throw Error(manifest_path + ": bundle is missing a stage model");
  }
  return p;
}

}  // namespace sarkas

#endif  // SARKAS_PIPELINE_HPP_
