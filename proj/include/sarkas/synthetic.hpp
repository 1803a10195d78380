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

// Template-based synthetic corpus generator standing in for hand-labeled
// tweets.
//
// Recipe, per document kind:
//   neutral    topic mention, objective nouns, often a low-score word
//              ("bisa", "biasa"), a question word with `question_rate`, and
//              a stray sentiment word with `neutral_sentiment_noise`.
//   positive   one or two strong positive words; with
//              `negated_opinion_rate` a negation plus a strong negative
//              word instead ("tidak jelek"); sometimes a context pair
//              ("harga mahasiswa") or slang the lexicon does not know.
//   negative   mirror image of positive, including negated positive words
//              ("tidak bagus") and affixed forms ("murahan").
//   sarcastic  a positive text that usually opens with interjections
//              ("wow ... wow") and is usually about a sensitive topic.
// Topics are drawn from sensitive or casual groups with per-kind rates;
// within a group negative documents favour high-negativity topics and the
// rest favour low-negativity ones. A few documents get a one-off personal
// topic. Surface noise then applies informal spellings, digit substitutions
// ("ga2l", "b4gus"), vowel elongation, casing and punctuation.

#ifndef SARKAS_SYNTHETIC_HPP_
#define SARKAS_SYNTHETIC_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "sarkas/common.hpp"
#include "sarkas/document.hpp"
#include "sarkas/features.hpp"
#include "sarkas/resources.hpp"

namespace sarkas {

struct TopicSpec {
  std::string name;
  // Words mentioning the topic in text.
  std::vector<std::string> phrase;
  // Target share of negative documents; used as a sampling weight, the
  // realized value is reported by the generator.
  double negativity = 0.5;
  bool sensitive = false;
};

inline std::vector<TopicSpec> default_topics() {
  return {
      {"pemerintah", {"pemerintah"}, 0.75, true},
      {"rhoma-irama", {"rhoma", "irama"}, 0.8, true},
      {"polri", {"polri"}, 0.7, true},
      {"telkomsel", {"telkomsel"}, 0.65, true},
      {"pilkada", {"pilkada"}, 0.6, true},
      {"dpr", {"dpr"}, 0.85, true},
      {"makanan", {"makanan"}, 0.1, false},
      {"film", {"film"}, 0.15, false},
      {"liburan", {"liburan"}, 0.05, false},
      {"musik", {"musik"}, 0.1, false},
      {"olahraga", {"pertandingan"}, 0.2, false},
      {"kesehatan", {"kesehatan"}, 0.15, false},
  };
}

struct CorpusSpec {
  // Distinguishes one-off personal topics between generated corpora.
  std::string tag = "train";
  std::size_t neutral = 502;
  std::size_t positive = 250;
  std::size_t negative = 228;
  // Share of positive documents that are sarcastic.
  double sarcasm_rate = 0.45;

  double question_rate = 0.35;
  double neutral_weak_word_rate = 0.6;
  double neutral_sentiment_noise = 0.12;
  double negated_opinion_rate = 0.2;
  // Share of negated opinions built on an everyday word.
  double common_negated_rate = 0.8;
  double context_pair_rate = 0.04;
  double slang_opinion_rate = 0.06;
  double opinion_weak_word_rate = 0.3;
  double mixed_opinion_rate = 0.06;
  double object_rate = 0.8;
  double second_object_rate = 0.35;

  double sarcastic_interjection_rate = 0.7;
  double genuine_interjection_rate = 0.1;
  double negative_interjection_rate = 0.1;
  double sarcastic_intensifier_rate = 0.7;
  double genuine_intensifier_rate = 0.4;

  double sarcastic_sensitive_rate = 0.8;
  double genuine_sensitive_rate = 0.2;
  double neutral_sensitive_rate = 0.3;
  double negative_sensitive_rate = 0.75;
  double personal_topic_rate = 0.04;
  double sarcastic_personal_topic_rate = 0.12;

  double informal_rate = 0.5;
  double leet_rate = 0.04;
  double elongation_rate = 0.05;

  std::vector<TopicSpec> topics = default_topics();

  // Training-split shape: 502 neutral, 250 positive, 228 negative.
  static CorpusSpec training() { return {}; }

  // Test-split shape: 200 neutral, 60 positive, 40 negative.
  static CorpusSpec testing() {
    CorpusSpec s;
    s.tag = "test";
    s.neutral = 200;
    s.positive = 60;
    s.negative = 40;
    return s;
  }

  std::size_t total() const { return neutral + positive + negative; }
  std::size_t sarcastic() const {
    return static_cast<std::size_t>(
        std::llround(static_cast<double>(positive) * sarcasm_rate));
  }
};

struct SyntheticCorpus {
  std::vector<Document> documents;
  // Per-topic negativity counted while generating.
  TopicNegativityRegistry registry;
};

namespace detail {

enum class DocKind { kNeutral, kGenuine, kSarcastic, kNegative };

class CorpusGenerator {
 public:
  CorpusGenerator(const CorpusSpec& spec, std::uint64_t seed)
      : spec_(spec), rng_(seed) {
    for (const auto& [informal, formal] : bundled::aux_lists().informal_dict) {
      informal_forms_[formal].push_back(informal);
    }
    for (const auto& w : bundled::strong_positive()) strong_pos_.push_back(w.term);
    for (const auto& w : bundled::strong_negative()) strong_neg_.push_back(w.term);
    for (const auto& w : bundled::weak_words()) {
      weak_.push_back(w.term);
      (w.pos > 0.0 ? weak_pos_ : weak_neg_).push_back(w.term);
    }
    const auto aux = bundled::aux_lists();
    interjections_.assign(aux.interjections.begin(), aux.interjections.end());
    questions_.assign(aux.question_words.begin(), aux.question_words.end());
  }

  SyntheticCorpus run() {
    if (spec_.sarcasm_rate < 0.0 || spec_.sarcasm_rate > 1.0) {
      throw Error("sarcasm rate must be in [0,1]");
    }
    if (spec_.topics.empty()) throw Error("corpus spec needs at least one topic");
    std::vector<DocKind> kinds;
    kinds.insert(kinds.end(), spec_.neutral, DocKind::kNeutral);
    const std::size_t sarcastic = spec_.sarcastic();
    kinds.insert(kinds.end(), spec_.positive - sarcastic, DocKind::kGenuine);
    kinds.insert(kinds.end(), sarcastic, DocKind::kSarcastic);
    kinds.insert(kinds.end(), spec_.negative, DocKind::kNegative);
    rng_.shuffle(kinds);

    SyntheticCorpus out;
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (DocKind kind : kinds) {
      Document doc = make(kind);
      auto& [neg, total] = counts[*doc.topic];
      neg += kind == DocKind::kNegative ? 1 : 0;
      total += 1;
      out.documents.push_back(std::move(doc));
    }
    for (const auto& [topic, c] : counts) out.registry.add(topic, c.first, c.second);
    return out;
  }

 private:
  using Tokens = std::vector<std::string>;

  Document make(DocKind kind) {
    Document doc;
    const TopicSpec* topic = nullptr;
    doc.topic = pick_topic(kind, &topic);
    const std::vector<std::string> phrase =
        topic ? topic->phrase : std::vector<std::string>{"dia"};

    Tokens body;
    Tokens lead;  // interjections, rendered with trailing punctuation
    bool question = false;
    switch (kind) {
      case DocKind::kNeutral:
        doc.sentiment = Sentiment::kNeutral;
        body = neutral_body(phrase, &question);
        break;
      case DocKind::kGenuine:
        doc.sentiment = Sentiment::kPositive;
        doc.sarcasm = false;
        if (rng_.bernoulli(spec_.genuine_interjection_rate)) lead.push_back(interjection());
        body = opinion_body(true, phrase, spec_.genuine_intensifier_rate);
        break;
      case DocKind::kSarcastic:
        doc.sentiment = Sentiment::kPositive;
        doc.sarcasm = true;
        if (rng_.bernoulli(spec_.sarcastic_interjection_rate)) {
          lead.push_back(interjection());
          if (rng_.bernoulli(0.3)) lead.push_back(interjection());
        }
        body = opinion_body(true, phrase, spec_.sarcastic_intensifier_rate);
        if (rng_.bernoulli(0.2)) body.push_back(":p");
        break;
      case DocKind::kNegative:
        doc.sentiment = Sentiment::kNegative;
        if (rng_.bernoulli(spec_.negative_interjection_rate)) lead.push_back(interjection());
        body = opinion_body(false, phrase, spec_.genuine_intensifier_rate);
        break;
    }
    doc.text = render(lead, body, kind, question);
    return doc;
  }

  std::string pick_topic(DocKind kind, const TopicSpec** chosen) {
    const double personal = kind == DocKind::kSarcastic
                                ? spec_.sarcastic_personal_topic_rate
                                : spec_.personal_topic_rate;
    if (rng_.bernoulli(personal)) {
      *chosen = nullptr;
      return "pribadi-" + spec_.tag + "-" + std::to_string(personal_counter_++);
    }
    double sensitive_rate = spec_.neutral_sensitive_rate;
    if (kind == DocKind::kGenuine) sensitive_rate = spec_.genuine_sensitive_rate;
    if (kind == DocKind::kSarcastic) sensitive_rate = spec_.sarcastic_sensitive_rate;
    if (kind == DocKind::kNegative) sensitive_rate = spec_.negative_sensitive_rate;
    bool sensitive = rng_.bernoulli(sensitive_rate);

    std::vector<const TopicSpec*> group;
    for (const auto& t : spec_.topics) {
      if (t.sensitive == sensitive) group.push_back(&t);
    }
    if (group.empty()) {
      for (const auto& t : spec_.topics) group.push_back(&t);
    }
    std::vector<double> weight;
    double total = 0.0;
    for (const auto* t : group) {
      const double w = kind == DocKind::kNegative ? t->negativity : 1.0 - t->negativity;
      weight.push_back(std::max(w, 1e-6));
      total += weight.back();
    }
    double r = rng_.uniform01() * total;
    std::size_t i = 0;
    while (i + 1 < group.size() && r >= weight[i]) r -= weight[i++];
    *chosen = group[i];
    return group[i]->name;
  }

  std::string interjection() { return rng_.pick(interjections_); }

  void insert_random(Tokens& t, const std::string& word, std::size_t from = 0) {
    const auto pos = from + static_cast<std::size_t>(rng_.uniform(t.size() - from + 1));
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), word);
  }

  void add_filler(Tokens& t, std::size_t max_words) {
    const auto n = rng_.uniform(max_words + 1);
    for (std::size_t i = 0; i < n; ++i) t.push_back(rng_.pick(bundled::filler_words()));
  }

  // Objective nouns, same distribution for every kind of document.
  void add_objects(Tokens& t) {
    if (!rng_.bernoulli(spec_.object_rate)) return;
    t.push_back(rng_.pick(bundled::objective_words()));
    if (rng_.bernoulli(spec_.second_object_rate)) t.push_back(rng_.pick(bundled::objective_words()));
  }

  Tokens neutral_body(const std::vector<std::string>& phrase, bool* question) {
    Tokens t;
    *question = rng_.bernoulli(spec_.question_rate);
    if (*question) t.push_back(rng_.pick(questions_));
    const std::size_t fixed = t.size();
    add_filler(t, 2);
    if (rng_.bernoulli(0.7)) t.insert(t.end(), phrase.begin(), phrase.end());
    add_objects(t);
    add_filler(t, 2);
    if (rng_.bernoulli(spec_.neutral_weak_word_rate)) insert_random(t, rng_.pick(weak_), fixed);
    if (rng_.bernoulli(spec_.neutral_sentiment_noise)) {
      insert_random(t, rng_.pick(rng_.bernoulli(0.5) ? strong_pos_ : strong_neg_), fixed);
    }
    return t;
  }

  // The sentiment-bearing core of an opinion.
  Tokens opinion_core(bool positive) {
    const auto& same = positive ? strong_pos_ : strong_neg_;
    const auto& opposite = positive ? strong_neg_ : strong_pos_;
    const double r = rng_.uniform01();
    double edge = spec_.slang_opinion_rate;
    if (r < edge) {
      return {rng_.pick(positive ? bundled::slang_positive() : bundled::slang_negative())};
    }
    edge += spec_.negated_opinion_rate;
    if (r < edge) {
      Tokens t{rng_.pick(std::vector<std::string>{"tidak", "tidak", "bukan", "belum"})};
      if (rng_.bernoulli(0.3)) t.push_back(rng_.pick(std::vector<std::string>{"begitu", "terlalu", "pernah"}));
      t.push_back(rng_.bernoulli(spec_.common_negated_rate)
                      ? rng_.pick(positive ? bundled::common_negative()
                                           : bundled::common_positive())
                      : rng_.pick(opposite));
      return t;
    }
    edge += spec_.context_pair_rate;
    if (r < edge) {
      if (positive) return {"harga", rng_.pick(std::vector<std::string>{"mahasiswa", "teman"})};
      return rng_.bernoulli(0.5) ? Tokens{rng_.pick(std::vector<std::string>{"murahan", "kampungan"})}
                                 : Tokens{"kurang", "ajar"};
    }
    Tokens t{rng_.pick(same)};
    if (rng_.bernoulli(0.3)) {
      t.push_back("dan");
      t.push_back(rng_.pick(same));
    }
    return t;
  }

  Tokens opinion_body(bool positive, const std::vector<std::string>& phrase,
                      double intensifier_rate) {
    Tokens t;
    if (rng_.bernoulli(0.65)) t.insert(t.end(), phrase.begin(), phrase.end());
    add_filler(t, 2);
    add_objects(t);
    const Tokens core = opinion_core(positive);
    const bool intensify = rng_.bernoulli(intensifier_rate);
    const bool before = rng_.bernoulli(0.5);
    if (intensify && before) t.push_back(rng_.pick(bundled::intensifiers()));
    t.insert(t.end(), core.begin(), core.end());
    if (intensify && !before) t.push_back(rng_.pick(bundled::intensifiers()));
    add_filler(t, 2);
    if (rng_.bernoulli(spec_.opinion_weak_word_rate)) {
      t.push_back(rng_.pick(positive ? weak_pos_ : weak_neg_));
    }
    if (rng_.bernoulli(spec_.mixed_opinion_rate)) {
      t.push_back("walaupun");
      t.push_back(rng_.pick(positive ? strong_neg_ : strong_pos_));
    }
    if (positive && rng_.bernoulli(0.1)) t.push_back(":)");
    return t;
  }

  static bool word_like(const std::string& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
  }

  std::string noisy(const std::string& word) {
    if (!word_like(word)) return word;
    std::string w = word;
    if (const auto it = informal_forms_.find(w);
        it != informal_forms_.end() && rng_.bernoulli(spec_.informal_rate)) {
      w = rng_.pick(it->second);
    }
    if (w == "gagal" && rng_.bernoulli(0.5)) {
      w = "ga2l";
    } else if (w.size() >= 4 && rng_.bernoulli(spec_.leet_rate)) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == 'a' || w[i] == 'e' || w[i] == 'i' || w[i] == 'o') spots.push_back(i);
      }
      if (!spots.empty()) {
        const auto i = rng_.pick(spots);
        w[i] = w[i] == 'a' ? '4' : w[i] == 'e' ? '3' : w[i] == 'i' ? '1' : '0';
      }
    }
    if (rng_.bernoulli(spec_.elongation_rate)) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const char c = w[i];
        const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
        const bool lonely = (i == 0 || w[i - 1] != c) && (i + 1 == w.size() || w[i + 1] != c);
        if (vowel && lonely) spots.push_back(i);
      }
      if (!spots.empty()) {
        const auto i = rng_.pick(spots);
        w.insert(i, 2 + rng_.uniform(3), w[i]);
      }
    }
    if (rng_.bernoulli(0.02)) {
      for (char& c : w) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      }
    }
    return w;
  }

  std::string render(const Tokens& lead, const Tokens& body, DocKind kind,
                     bool question) {
    std::vector<std::string> words;
    for (const auto& w : lead) {
      words.push_back(noisy(w) +
                      rng_.pick(std::vector<std::string>{",", "...", "", "!"}));
    }
    for (const auto& w : body) words.push_back(noisy(w));
    if (words.empty()) words.push_back("hmm");
    if (rng_.bernoulli(0.5) && !words.front().empty() && words.front()[0] >= 'a' &&
        words.front()[0] <= 'z') {
      words.front()[0] = static_cast<char>(words.front()[0] - 'a' + 'A');
    }
    std::string end;
    if (question) {
      end = "?";
    } else if (kind == DocKind::kNeutral) {
      end = rng_.pick(std::vector<std::string>{"", ".", "."});
    } else {
      end = rng_.pick(std::vector<std::string>{"", "!", "!!", ".", "..."});
    }
    // Sentence punctuation goes before a trailing emoticon.
    if (words.size() > 1 && text::is_punct(words.back().front())) {
      words[words.size() - 2] += end;
    } else {
      words.back() += end;
    }
    return text::join(words, " ");
  }

  const CorpusSpec& spec_;
  Rng rng_;
  std::map<std::string, std::vector<std::string>> informal_forms_;
  std::vector<std::string> strong_pos_;
  std::vector<std::string> strong_neg_;
  std::vector<std::string> weak_;
  std::vector<std::string> weak_pos_;
  std::vector<std::string> weak_neg_;
  std::vector<std::string> interjections_;
  std::vector<std::string> questions_;
  std::size_t personal_counter_ = 0;
};

}  // namespace detail

// Deterministic in (spec, seed). Class counts are exact.
inline SyntheticCorpus generate_synthetic_corpus(const CorpusSpec& spec,
                                                 std::uint64_t seed) {
  return detail::CorpusGenerator(spec, seed).run();
}

}  // namespace sarkas

#endif  // SARKAS_SYNTHETIC_HPP_
