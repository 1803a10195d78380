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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sarkas/evaluation.hpp"
#include "sarkas/normalizer.hpp"
#include "sarkas/resources.hpp"
#include "support.hpp"

namespace {

using namespace sarkas;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  // Zero means no time limit.
  double limit_seconds;
  std::function<Outcome()> check;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string pct(double x) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << 100.0 * x;
  return s.str();
}

const ExperimentData& benchmark() {
  static const ExperimentData data = synthetic_benchmark(42);
  return data;
}

Outcome normalizer_fidelity() {
  const auto aux = bundled::aux_lists();
  if (convert_numerics("ga2l") != "gagal") return fail("ga2l -> " + convert_numerics("ga2l"));
  if (collapse_vowel_runs("cemunguuudh") != "cemungudh") {
    return fail("cemunguuudh -> " + collapse_vowel_runs("cemunguuudh"));
  }
  if (translate_informal({"cemungudh"}, aux.informal_dict) != TokenSeq{"semangat"}) {
    return fail("cemungudh not translated to semangat");
  }
  if (normalize("cemunguuudh", aux) != TokenSeq{"semangat"}) {
    return fail("full normalization of cemunguuudh");
  }
  std::size_t checked = 0;
  for (const auto* split : {&benchmark().train, &benchmark().test}) {
    for (const auto& d : *split) {
      const auto once = normalize(d.text, aux);
      std::string joined;
      for (const auto& t : once) joined += (joined.empty() ? "" : " ") + t;
      if (normalize(joined, aux) != once) return fail("not idempotent on: " + d.text);
      ++checked;
    }
  }
  return {true, "idempotent on " + std::to_string(checked) + " documents"};
}

Outcome lexicon_averaging() {
  const std::vector<RawTriple> fixture = {
      {"cocok", 0.5, 0.0, 1}, {"memajukan", 0.25, 0.0, 2}, {"memajukan", 0.5, 0.0, 3}};
  const auto lex = merge_translations(fixture);
  if (lex.lookup("cocok")->pos_score != 0.5) return fail("cocok");
  if (lex.lookup("memajukan")->pos_score != 0.375) return fail("memajukan");

  Rng rng(2);
  std::vector<RawTriple> rows;
  for (int i = 0; i < 60; ++i) {
    rows.push_back({"w" + std::to_string(rng.uniform(std::uint64_t{12})), rng.uniform01() * 0.5,
                    rng.uniform01() * 0.5, 0});
  }
  const auto want = serialize_lexicon(merge_translations(rows));
  for (int s = 0; s < 1000; ++s) {
    rng.shuffle(rows);
    if (serialize_lexicon(merge_translations(rows)) != want) {
      return fail("shuffle " + std::to_string(s) + " changed the merge");
    }
  }
  return {true, "cocok 0.5, memajukan 0.375, 1000 shuffles identical"};
}

Outcome naive_bayes_oracle() {
  Rng rng(3);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto ds = testing::random_count_dataset(rng, 8, 3, 3);
    const auto m = train(ds, Algorithm::kNaiveBayes);
    for (const auto& x : ds.vectors) {
      const auto got = predict_dist(m, x);
      const auto want = testing::bayes_posterior(ds, x, m.hyperparams.nb_alpha);
      for (std::size_t c = 0; c < want.size(); ++c) {
        worst = std::max(worst, std::abs(got[c] - want[c]));
      }
    }
  }
  std::ostringstream s;
  s << "200 datasets, max posterior error " << worst;
  return {worst <= 1e-9, s.str()};
}

Outcome maxent_gradient() {
  Rng rng(4);
  double worst = 0.0;
  const double l2 = Hyperparams{}.maxent_l2;
  for (int problem = 0; problem < 20; ++problem) {
    const auto ds = testing::random_count_dataset(rng, 8, 3, 3);
    const std::size_t size = ds.classes.size() * maxent::stride(ds);
    for (int point = 0; point < 10; ++point) {
      std::vector<double> params(size);
      for (auto& p : params) p = rng.uniform(-1.0, 1.0);
      const auto g = maxent::gradient(ds, params, l2);
      double diff = 0.0, norm_g = 0.0, norm_fd = 0.0;
      for (std::size_t i = 0; i < size; ++i) {
        const double fd = testing::central_difference(ds, params, i, l2, 1e-5);
        diff += (g[i] - fd) * (g[i] - fd);
        norm_g += g[i] * g[i];
        norm_fd += fd * fd;
      }
      const double denom = std::max({std::sqrt(norm_g), std::sqrt(norm_fd), 1e-12});
      worst = std::max(worst, std::sqrt(diff) / denom);
    }
  }
  std::ostringstream s;
  s << "20 problems x 10 points, max relative error " << worst;
  return {worst <= 1e-4, s.str()};
}

Outcome svm_convergence() {
  Rng rng(5);
  Hyperparams h;
  h.svm_epochs = 100;
  for (int trial = 0; trial < 50; ++trial) {
    const auto ds = testing::separable_toy(rng);
    const auto m = train(ds, Algorithm::kSvm, h, static_cast<std::uint64_t>(trial));
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (predict(m, ds.vectors[i]) != ds.labels[i]) {
        return fail("toy " + std::to_string(trial) + " misclassifies point " +
                    std::to_string(i));
      }
    }
  }
  return {true, "50 toys separated within 100 epochs"};
}

Outcome score_trend() {
  const auto r =
      experiment_sentiment_score(benchmark(), ExperimentOptions::bundled_resources(), 42);
  Outcome out;
  double gain = 0.0;
  for (const auto& a : r.algorithms) {
    const double lex = r.accuracy(a, "lexical"), score = r.accuracy(a, "score");
    gain += score - lex;
    out.ok &= score >= lex;
    out.detail += a + " " + pct(lex) + "->" + pct(score) + " ";
  }
  gain /= static_cast<double>(r.algorithms.size());
  out.ok &= gain * 100.0 >= 2.0;
  out.detail += "mean gain " + pct(gain) + " points";
  return out;
}

Outcome sarcasm_trend() {
  const auto r = experiment_sarcasm(benchmark(), ExperimentOptions::bundled_resources(), 42);
  Outcome out;
  const std::string base = "gold/" + std::string(kUnigramOnly);
  const std::string aug = "gold/" + std::string(kAugmented);
  for (const auto& a : r.algorithms) {
    const double u = r.accuracy(a, base), f = r.accuracy(a, aug);
    out.ok &= (f - u) * 100.0 >= 5.0;
    out.detail += a + " " + pct(u) + "->" + pct(f) + " ";
  }
  out.detail.pop_back();
  return out;
}

Outcome method_harness() {
  const auto r = experiment_method(benchmark(), ExperimentOptions::bundled_resources(), 42);
  if (r.cells.size() != 6) return fail(std::to_string(r.cells.size()) + " cells");
  if (r.sub_cells.size() != 6) return fail(std::to_string(r.sub_cells.size()) + " sub-cells");
  Outcome out;
  for (const auto& a : r.algorithms) {
    const double leveled = r.accuracy(a, "leveled"), direct = r.accuracy(a, "direct");
    const double gate = r.accuracy(a, subcell::kGate, true);
    const double pol = r.accuracy(a, subcell::kPolarity, true);
    out.ok &= leveled <= gate && leveled <= pol;
    out.detail += a + " leveled " + pct(leveled) + " direct " + pct(direct) + " (" +
                  (direct > leveled ? "direct better" : direct < leveled ? "leveled better" : "tie") +
                  ") ";
  }
  out.detail.pop_back();
  return out;
}

// Random text drawn from corpus words, slang, numerics, noise and emoticons.
std::vector<Document> random_inputs(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> words;
  for (const auto& d : benchmark().train) {
    for (const auto& t : tokenize(d.text)) words.push_back(t);
  }
  for (const char* w : {"gak", "bgt", "b4gus", "waaaah", ":p", ":)", "!!!", "?", "x2",
                        "cemunguuudh", "12345", "", "ÄÖ", "kurang", "ajar", "murahan"}) {
    words.emplace_back(w);
  }
  const auto topics = default_topics();
  std::vector<Document> out;
  for (std::size_t i = 0; i < n; ++i) {
    Document d;
    const auto len = rng.uniform(std::uint64_t{16});
    for (std::uint64_t k = 0; k < len; ++k) {
      d.text += (k ? " " : "") + rng.pick(words);
    }
    const auto t = rng.uniform(std::uint64_t{4});
    if (t == 1) d.topic = "never-seen-topic";
    if (t >= 2) d.topic = rng.pick(topics).name;
    out.push_back(std::move(d));
  }
  return out;
}

PipelineConfig config_for(Algorithm a, Stage1Method m) {
  PipelineConfig c;
  c.stage1_algorithm = a;
  c.stage2_algorithm = a;
  c.stage1_method = m;
  return c;
}

Pipeline train_default(const PipelineConfig& c) {
  return train_pipeline(benchmark().train, bundled::lexicon(), bundled::aux_lists(), c);
}

Outcome pipeline_contract() {
  const auto inputs = random_inputs(1000, 9);
  std::size_t positives = 0, sarcastic = 0;
  for (auto a : kAllAlgorithms) {
    for (auto m : {Stage1Method::kDirect, Stage1Method::kLeveled}) {
      const auto p = train_default(config_for(a, m));
      const auto q = train_default(config_for(a, m));
      for (const auto& d : inputs) {
        const auto pred = p.classify(d);
        if (pred.sarcasm.has_value() != (pred.sentiment == Sentiment::kPositive)) {
          return fail("sarcasm presence on: " + d.text);
        }
        if (pred.sarcasm.value_or(false) && pred.final_label != Sentiment::kNegative) {
          return fail("sarcastic but not negative: " + d.text);
        }
        if (!pred.sarcasm.value_or(false) && pred.final_label != pred.sentiment) {
          return fail("final label changed without sarcasm: " + d.text);
        }
        if (p.classify(d) != pred || q.classify(d) != pred) {
          return fail("nondeterministic on: " + d.text);
        }
        positives += pred.sarcasm.has_value();
        sarcastic += pred.sarcasm.value_or(false);
      }
    }
  }
  return {true, "6 configurations x 1000 inputs, " + std::to_string(positives) +
                    " positive verdicts, " + std::to_string(sarcastic) + " sarcastic"};
}

std::string bundle_bytes(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) {
    all += std::filesystem::relative(f, dir).string() + '\n' + io::read_file(f.string());
  }
  return all;
}

Outcome persistence() {
  const auto inputs = random_inputs(500, 10);
  testing::TempDir tmp;
  for (auto a : kAllAlgorithms) {
    for (auto m : {Stage1Method::kDirect, Stage1Method::kLeveled}) {
      const auto name = std::string(algorithm_name(a)) + "-" + std::string(method_name(m));
      const auto p = train_default(config_for(a, m));
      save_pipeline(p, tmp / (name + "-1"));
      save_pipeline(train_default(config_for(a, m)), tmp / (name + "-2"));
      if (bundle_bytes(tmp / (name + "-1")) != bundle_bytes(tmp / (name + "-2"))) {
        return fail(name + ": bundle bytes differ between runs");
      }
      const auto loaded = load_pipeline(tmp / (name + "-1"));
      for (const auto& d : inputs) {
        if (loaded.classify(d) != p.classify(d)) return fail(name + ": differs on " + d.text);
      }
    }
  }
  return {true, "6 bundles, 500 inputs each, identical after reload"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "normalizer fidelity", 1.0, normalizer_fidelity},
      {2, "lexicon averaging", 0.0, lexicon_averaging},
      {3, "naive bayes oracle", 10.0, naive_bayes_oracle},
      {4, "maxent gradient", 0.0, maxent_gradient},
      {5, "svm separable convergence", 0.0, svm_convergence},
      {6, "score beats lexical", 60.0, score_trend},
      {7, "sarcasm features", 60.0, sarcasm_trend},
      {8, "leveled vs direct harness", 0.0, method_harness},
      {9, "pipeline contract", 0.0, pipeline_contract},
      {10, "persistence", 0.0, persistence},
  };
  // The shared corpus is built before timing starts.
  benchmark();
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      out.ok = false;
      out.detail += " [over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s]";
    }
    failures += !out.ok;
    std::printf("%s %d %s: %s (%.3f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), seconds);
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
