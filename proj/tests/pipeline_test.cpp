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


#include <filesystem>

#include <gtest/gtest.h>

#include "sarkas/evaluation.hpp"
#include "sarkas/pipeline.hpp"
#include "sarkas/resources.hpp"
#include "sarkas/synthetic.hpp"
#include "support.hpp"

namespace sarkas {
namespace {

class PipelineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    data_ = new ExperimentData(synthetic_benchmark(42));
  }
  static void TearDownTestSuite() {
    delete data_;
    data_ = nullptr;
  }

  static Pipeline train_with(const PipelineConfig& config,
                             TrainScope scope = TrainScope::kFull) {
    return train_pipeline(data_->train, bundled::lexicon(), bundled::aux_lists(), config,
                          scope);
  }

  static ExperimentData* data_;
};

ExperimentData* PipelineTest::data_ = nullptr;

TEST_F(PipelineTest, DirectStageSizes) {
  const auto p = train_with({});
  EXPECT_EQ(p.summary().stage1_examples, 980u);
  EXPECT_EQ(p.summary().sarcasm_examples, 250u);
  EXPECT_TRUE(p.sentiment_model());
  EXPECT_FALSE(p.opinion_model());
  EXPECT_EQ(p.sentiment_model()->classes, stage::sentiment_classes());
}

TEST_F(PipelineTest, LeveledStageSizes) {
  PipelineConfig c;
  c.stage1_method = Stage1Method::kLeveled;
  const auto p = train_with(c);
  EXPECT_EQ(p.summary().opinion_examples, 980u);
  EXPECT_EQ(p.summary().polarity_examples, 478u);
  EXPECT_FALSE(p.sentiment_model());
  EXPECT_EQ(p.opinion_model()->classes, stage::opinion_classes());
  EXPECT_EQ(p.polarity_model()->classes, stage::polarity_classes());
}

TEST_F(PipelineTest, PredictionContract) {
  for (auto method : {Stage1Method::kDirect, Stage1Method::kLeveled}) {
    PipelineConfig c;
    c.stage1_method = method;
    const auto p = train_with(c);
    for (const auto& doc : data_->test) {
      const auto pred = p.classify(doc);
      ASSERT_EQ(pred.sarcasm.has_value(), pred.sentiment == Sentiment::kPositive);
      if (pred.sarcasm && *pred.sarcasm) {
        ASSERT_EQ(pred.final_label, Sentiment::kNegative);
      } else {
        ASSERT_EQ(pred.final_label, pred.sentiment);
      }
      ASSERT_EQ(pred.stage(stage::kSarcasm) != nullptr, pred.sarcasm.has_value());
      for (const auto& s : pred.stage_scores) {
        double sum = 0.0;
        for (double q : s.probabilities) sum += q;
        ASSERT_NEAR(sum, 1.0, 1e-9);
      }
    }
  }
}

TEST_F(PipelineTest, LeveledSkipsPolarityForNeutrals) {
  PipelineConfig c;
  c.stage1_method = Stage1Method::kLeveled;
  const auto p = train_with(c);
  for (const auto& doc : data_->test) {
    const auto pred = p.classify(doc);
    ASSERT_NE(pred.stage(stage::kOpinion), nullptr);
    ASSERT_EQ(pred.stage(stage::kPolarity) == nullptr, pred.sentiment == Sentiment::kNeutral);
  }
}

TEST_F(PipelineTest, NoPositivesMeansNoSarcasmModel) {
  std::vector<Document> docs;
  for (const auto& d : data_->train) {
    if (d.sentiment != Sentiment::kPositive) docs.push_back(d);
  }
  try {
    train_pipeline(docs, bundled::lexicon(), bundled::aux_lists(), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("stage 2"), std::string::npos) << e.what();
  }
  // Stage 1 alone does not need positives.
  const auto p = train_pipeline(docs, bundled::lexicon(), bundled::aux_lists(), {},
                                TrainScope::kStage1Only);
  EXPECT_FALSE(p.sarcasm_model());
  EXPECT_THROW(p.classify_sarcasm({"bagus"}, std::nullopt), Error);
}

TEST_F(PipelineTest, MissingLabelsAreReported) {
  auto docs = data_->train;
  docs[3].sentiment.reset();
  EXPECT_THROW(train_pipeline(docs, bundled::lexicon(), bundled::aux_lists(), {}), Error);
  docs = data_->train;
  for (auto& d : docs) {
    if (d.sentiment == Sentiment::kPositive) {
      d.sarcasm.reset();
      break;
    }
  }
  EXPECT_THROW(train_pipeline(docs, bundled::lexicon(), bundled::aux_lists(), {}), Error);
}

TEST_F(PipelineTest, SaveLoadReproducesPredictions) {
  for (auto algorithm : kAllAlgorithms) {
    for (auto method : {Stage1Method::kDirect, Stage1Method::kLeveled}) {
      PipelineConfig c;
      c.stage1_method = method;
      c.stage1_algorithm = algorithm;
      c.stage2_algorithm = algorithm;
      const auto p = train_with(c);
      testing::TempDir dir;
      save_pipeline(p, dir / "bundle");
      const auto q = load_pipeline(dir / "bundle");
      EXPECT_EQ(q.config().to_json(), p.config().to_json());
      EXPECT_EQ(q.registry(), p.registry());
      for (const auto& doc : data_->test) ASSERT_EQ(q.classify(doc), p.classify(doc));
    }
  }
}

TEST_F(PipelineTest, BundlesAreByteDeterministic) {
  testing::TempDir dir;
  save_pipeline(train_with({}), dir / "a");
  save_pipeline(train_with({}), dir / "b");
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir / "a")) {
    if (!entry.is_regular_file()) continue;
    const auto rel = std::filesystem::relative(entry.path(), dir / "a");
    EXPECT_EQ(io::read_file(entry.path().string()),
              io::read_file((std::filesystem::path(dir / "b") / rel).string()))
        << rel;
  }
}

TEST_F(PipelineTest, PartialPipelinesAreNotSaved) {
  testing::TempDir dir;
  EXPECT_THROW(save_pipeline(train_with({}, TrainScope::kStage1Only), dir / "x"), Error);
  EXPECT_THROW(save_pipeline(train_with({}, TrainScope::kSarcasmOnly), dir / "y"), Error);
}

TEST_F(PipelineTest, LoadRejectsDamagedBundles) {
  testing::TempDir dir;
  save_pipeline(train_with({}), dir / "b");
  const auto manifest = dir / "b/manifest.json";
  auto text = io::read_file(manifest);
  io::write_file(manifest, std::string(text).replace(text.find("\"format_version\": 1"),
                                                      19, "\"format_version\": 9"));
  EXPECT_THROW(load_pipeline(dir / "b"), Error);
  io::write_file(manifest, text);
  std::filesystem::remove(dir / "b/sarcasm.model");
  EXPECT_THROW(load_pipeline(dir / "b"), Error);
  EXPECT_THROW(load_pipeline(dir / "missing"), Error);
}

TEST(PipelineConfig, JsonRoundTripAndValidation) {
  PipelineConfig c;
  c.stage1_method = Stage1Method::kLeveled;
  c.stage2_algorithm = Algorithm::kSvm;
  c.feature_mode = FeatureMode::kLexical;
  c.features.negation_window = 2;
  c.hyperparams.svm_epochs = 7;
  const auto back = PipelineConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  c.stage2_groups = FeatureGroups{FeatureGroup::kNegativity};
  EXPECT_THROW(c.validate(), Error);
}

TEST(Seeds, DerivedSeedsDifferByLabel) {
  EXPECT_EQ(derive_seed(42, "train"), derive_seed(42, "train"));
  EXPECT_NE(derive_seed(42, "train"), derive_seed(42, "test"));
  EXPECT_NE(derive_seed(42, "train"), derive_seed(43, "train"));
}

}  // namespace
}  // namespace sarkas
