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

// Feature extraction: lexicon-scored unigrams (with context, affix and
// negation handling), topic negativity, interjection count and the
// question-word flag, laid out in a frozen FeatureSpace.

#ifndef SARKAS_FEATURES_HPP_
#define SARKAS_FEATURES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sarkas/common.hpp"
#include "sarkas/document.hpp"
#include "sarkas/lexicon.hpp"
#include "sarkas/normalizer.hpp"

namespace sarkas {

enum class FeatureMode { kLexical, kScore };

inline std::string_view mode_name(FeatureMode m) {
  return m == FeatureMode::kLexical ? "lexical" : "score";
}

inline std::optional<FeatureMode> parse_mode(std::string_view s) {
  if (s == "lexical") return FeatureMode::kLexical;
  if (s == "score") return FeatureMode::kScore;
  return std::nullopt;
}

enum class FeatureGroup : std::uint8_t {
  kUnigram = 1,
  kNegativity = 2,
  kInterjection = 4,
  kQuestion = 8,
};

// Set of enabled feature groups.
class FeatureGroups {
 public:
  constexpr FeatureGroups() = default;
  constexpr FeatureGroups(std::initializer_list<FeatureGroup> groups) {
    for (auto g : groups) bits_ |= static_cast<std::uint8_t>(g);
  }

  constexpr bool has(FeatureGroup g) const {
    return (bits_ & static_cast<std::uint8_t>(g)) != 0;
  }
  constexpr FeatureGroups with(FeatureGroup g) const {
    FeatureGroups out = *this;
    out.bits_ |= static_cast<std::uint8_t>(g);
    return out;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (has(FeatureGroup::kUnigram)) out.emplace_back("unigram");
    if (has(FeatureGroup::kNegativity)) out.emplace_back("negativity");
    if (has(FeatureGroup::kInterjection)) out.emplace_back("interjection");
    if (has(FeatureGroup::kQuestion)) out.emplace_back("question");
    return out;
  }

  static FeatureGroups from_names(const std::vector<std::string>& names) {
    FeatureGroups g;
    for (const auto& n : names) {
      if (n == "unigram") g = g.with(FeatureGroup::kUnigram);
      else if (n == "negativity") g = g.with(FeatureGroup::kNegativity);
      else if (n == "interjection") g = g.with(FeatureGroup::kInterjection);
      else if (n == "question") g = g.with(FeatureGroup::kQuestion);
      else throw Error("unknown feature group '" + n + "'");
    }
    return g;
  }

  friend constexpr bool operator==(FeatureGroups, FeatureGroups) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Column layout. SCORE mode gives every term a positive and a negative
// column (2k, 2k+1); LEXICAL mode a single count column k. Extra slots for
// enabled groups follow the unigram block in a fixed order.
class FeatureSpace {
 public:
  static std::shared_ptr<const FeatureSpace> create(
      std::vector<std::string> vocabulary, FeatureMode mode,
      FeatureGroups groups) {
    std::sort(vocabulary.begin(), vocabulary.end());
    vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()),
                     vocabulary.end());
    return std::shared_ptr<const FeatureSpace>(
        new FeatureSpace(std::move(vocabulary), mode, groups));
  }

  // Scoring vocabulary of a resource set: lexicon terms plus the terms the
  // override lists can score.
  static std::vector<std::string> resource_vocabulary(
      const SentimentLexicon& lex, const AuxLists& aux) {
    std::vector<std::string> vocab;
    for (const auto& [term, e] : lex.entries()) vocab.push_back(term);
    for (const auto& [term, s] : aux.affix_overrides) vocab.push_back(term);
    for (const auto& [key, s] : aux.context_overrides) vocab.push_back(key.second);
    return vocab;
  }

  FeatureMode mode() const { return mode_; }
  FeatureGroups groups() const { return groups_; }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  std::size_t dimension() const { return dimension_; }

  std::optional<std::size_t> term_index(std::string_view term) const {
    const auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool in_vocabulary(std::string_view term) const {
    return index_.count(std::string(term)) > 0;
  }

  std::size_t unigram_columns() const { return unigram_columns_; }
  std::optional<std::size_t> negativity_slot() const { return negativity_slot_; }
  std::optional<std::size_t> interjection_slot() const { return interjection_slot_; }
  std::optional<std::size_t> question_slot() const { return question_slot_; }

  // Human-readable column name, used in reports and debugging.
  std::string column_name(std::size_t col) const {
    if (col < unigram_columns_) {
      if (mode_ == FeatureMode::kLexical) return vocabulary_[col];
      return vocabulary_[col / 2] + (col % 2 == 0 ? "+pos" : "+neg");
    }
    if (negativity_slot_ == col) return "NEGATIVITY";
    if (interjection_slot_ == col) return "INTERJECTION_COUNT";
    if (question_slot_ == col) return "QUESTION_FLAG";
    return "?";
  }

  nlohmann::json to_json() const {
    return {{"mode", std::string(mode_name(mode_))},
            {"groups", groups_.names()},
            {"vocabulary", vocabulary_}};
  }

  static std::shared_ptr<const FeatureSpace> from_json(const nlohmann::json& j) {
    const auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!mode) throw Error("feature space: unknown mode");
    return create(j.at("vocabulary").get<std::vector<std::string>>(), *mode,
                  FeatureGroups::from_names(
                      j.at("groups").get<std::vector<std::string>>()));
  }

  friend bool operator==(const FeatureSpace& a, const FeatureSpace& b) {
    return a.mode_ == b.mode_ && a.groups_ == b.groups_ &&
           a.vocabulary_ == b.vocabulary_;
  }

 private:
  FeatureSpace(std::vector<std::string> vocabulary, FeatureMode mode,
               FeatureGroups groups)
      : vocabulary_(std::move(vocabulary)), mode_(mode), groups_(groups) {
    for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
      index_.emplace(vocabulary_[i], i);
    }
    if (groups_.has(FeatureGroup::kUnigram)) {
      unigram_columns_ =
          vocabulary_.size() * (mode_ == FeatureMode::kScore ? 2 : 1);
    }
    std::size_t next = unigram_columns_;
    if (groups_.has(FeatureGroup::kNegativity)) negativity_slot_ = next++;
    if (groups_.has(FeatureGroup::kInterjection)) interjection_slot_ = next++;
    if (groups_.has(FeatureGroup::kQuestion)) question_slot_ = next++;
    dimension_ = next;
  }

  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::size_t> index_;
  FeatureMode mode_;
  FeatureGroups groups_;
  std::size_t unigram_columns_ = 0;
  std::optional<std::size_t> negativity_slot_;
  std::optional<std::size_t> interjection_slot_;
  std::optional<std::size_t> question_slot_;
  std::size_t dimension_ = 0;
};

using SpacePtr = std::shared_ptr<const FeatureSpace>;

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

// Sparse vector: (column, value) pairs sorted by column, zeros omitted.
class FeatureVector {
 public:
  using Entry = std::pair<std::uint32_t, double>;

  FeatureVector() = default;
  explicit FeatureVector(SpacePtr space) : space_(std::move(space)) {}

  FeatureVector(SpacePtr space, std::vector<Entry> entries)
      : space_(std::move(space)) {
    std::map<std::uint32_t, double> merged;
    for (const auto& [i, v] : entries) merged[i] += v;
    for (const auto& [i, v] : merged) set(i, v);
  }

  static FeatureVector from_dense(SpacePtr space, std::span<const double> dense) {
    FeatureVector v(std::move(space));
    for (std::size_t i = 0; i < dense.size(); ++i) v.set(i, dense[i]);
    return v;
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  double get(std::size_t col) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), col,
        [](const Entry& e, std::size_t c) { return e.first < c; });
    return it != entries_.end() && it->first == col ? it->second : 0.0;
  }

  // Setting zero removes the column.
  void set(std::size_t col, double value) {
    if (space_ && col >= space_->dimension()) {
      throw Error("feature column " + std::to_string(col) +
                  " outside space of dimension " +
                  std::to_string(space_->dimension()));
    }
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), col,
        [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) {
      if (value == 0.0) entries_.erase(it);
      else it->second = value;
    } else if (value != 0.0) {
      entries_.insert(it, {static_cast<std::uint32_t>(col), value});
    }
  }

  double dot(std::span<const double> weights) const {
    double s = 0.0;
    for (const auto& [i, v] : entries_) s += weights[i] * v;
    return s;
  }

  friend bool operator==(const FeatureVector& a, const FeatureVector& b) {
    return same_space(a.space_, b.space_) && a.entries_ == b.entries_;
  }

 private:
  SpacePtr space_;
  std::vector<Entry> entries_;
};

struct UnigramMass {
  double pos = 0.0;
  double neg = 0.0;
  // Occurrences, used by LEXICAL encoding.
  int count = 0;

  friend bool operator==(const UnigramMass&, const UnigramMass&) = default;
};

enum class UnknownTopicPolicy { kLenient, kStrict };

struct FeatureOptions {
  // Negation words this many tokens before a sentiment word flip it.
  std::size_t negation_window = 3;
  // Count each term once (per-channel maximum) instead of accumulating.
  bool binary_occurrence = false;
  UnknownTopicPolicy unknown_topic = UnknownTopicPolicy::kLenient;
  double unknown_topic_negativity = 0.5;
};

namespace detail {
inline std::pair<double, double> signed_to_channels(double s) {
  return s >= 0.0 ? std::pair{s, 0.0} : std::pair{0.0, -s};
}
}  // namespace detail

// Per-term (pos, neg) masses for in-vocabulary tokens.
//
// Each occurrence starts from its lexicon scores, then the first matching
// rule replaces them: a context pair with the immediately preceding token,
// then an affix override for the surface form. Negation is applied last:
// a negation word flips the channels of the closest sentiment word after it
// if that word lies within `negation_window` tokens. Each negation word
// flips at most one word; two negations on one word cancel.
inline std::map<std::string, UnigramMass> score_unigrams(
    const TokenSeq& tokens, const SentimentLexicon& lex, const AuxLists& aux,
    const FeatureOptions& options = {}) {
  std::map<std::string, UnigramMass> out;
  std::vector<std::size_t> pending_negations;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    std::optional<std::pair<double, double>> mass;

    if (i > 0) {
      const auto ctx = aux.context_overrides.find({tokens[i - 1], tok});
      if (ctx != aux.context_overrides.end()) {
        mass = detail::signed_to_channels(ctx->second);
      }
    }
    if (!mass) {
      const auto affix = aux.affix_overrides.find(tok);
      if (affix != aux.affix_overrides.end()) {
        mass = detail::signed_to_channels(affix->second);
      }
    }
    if (!mass) {
      const auto entry = lex.entries().find(tok);
      if (entry != lex.entries().end()) {
        mass = std::pair{entry->second.pos_score, entry->second.neg_score};
      }
    }

    if (mass) {
      const bool sentiment_word = mass->first != 0.0 || mass->second != 0.0;
      if (sentiment_word) {
        std::size_t flips = 0;
        for (std::size_t pos : pending_negations) {
          if (i - pos <= options.negation_window) ++flips;
        }
        pending_negations.clear();
        if (flips % 2 == 1) std::swap(mass->first, mass->second);
      }
      auto& m = out[tok];
      if (options.binary_occurrence) {
        m.pos = std::max(m.pos, mass->first);
        m.neg = std::max(m.neg, mass->second);
        m.count = 1;
      } else {
        m.pos += mass->first;
        m.neg += mass->second;
        m.count += 1;
      }
    }

    if (aux.negations.count(tok)) pending_negations.push_back(i);
  }
  return out;
}

inline std::size_t interjection_count(const TokenSeq& tokens,
                                      const AuxLists& aux) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [&](const std::string& t) {
        return aux.interjections.count(t) > 0;
      }));
}

inline bool question_flag(const TokenSeq& tokens, const AuxLists& aux) {
  return std::any_of(tokens.begin(), tokens.end(), [&](const std::string& t) {
    return aux.question_words.count(t) > 0;
  });
}

// Fraction of negative-labeled documents per topic.
class TopicNegativityRegistry {
 public:
  struct Stat {
    std::size_t negative = 0;
    std::size_t total = 0;
    friend bool operator==(const Stat&, const Stat&) = default;
  };

  void add(const std::string& topic, std::size_t negative, std::size_t total) {
    if (total == 0 || negative > total) {
      throw Error("topic '" + topic + "': invalid counts");
    }
    auto& s = stats_[topic];
    s.negative += negative;
    s.total += total;
  }

  std::optional<double> negativity(std::string_view topic) const {
    const auto it = stats_.find(std::string(topic));
    if (it == stats_.end()) return std::nullopt;
    return static_cast<double>(it->second.negative) /
           static_cast<double>(it->second.total);
  }

  std::optional<std::size_t> sample_size(std::string_view topic) const {
    const auto it = stats_.find(std::string(topic));
    if (it == stats_.end()) return std::nullopt;
    return it->second.total;
  }

  const std::map<std::string, Stat>& stats() const { return stats_; }
  std::size_t size() const { return stats_.size(); }

  // topic<TAB>fraction<TAB>sample_size
  std::string serialize() const {
    std::string out;
    for (const auto& [topic, s] : stats_) {
      out += topic + '\t' + text::format_double(*negativity(topic)) + '\t' +
             std::to_string(s.total) + '\n';
    }
    return out;
  }

  static TopicNegativityRegistry parse(std::string_view content,
                                       std::string_view source = "<registry>") {
    TopicNegativityRegistry reg;
    detail::for_each_row(content, source, 3, [&](const auto& f, std::size_t line) {
      const auto fraction = text::parse_double(f[1]);
      const auto size = text::parse_int(f[2]);
      if (!fraction || *fraction < 0.0 || *fraction > 1.0) {
        throw ParseError(std::string(source), line, "fraction outside [0,1]");
      }
      if (!size || *size <= 0) {
        throw ParseError(std::string(source), line,
                         "sample size must be a positive integer");
      }
      // Counts are recovered from the fraction; the file stores the exact
      // quotient so rounding gives back the original numerator.
      const auto total = static_cast<std::size_t>(*size);
      const auto negative = static_cast<std::size_t>(
          std::llround(*fraction * static_cast<double>(total)));
      reg.stats_[std::string(f[0])] = Stat{negative, total};
    });
    return reg;
  }

  friend bool operator==(const TopicNegativityRegistry&,
                         const TopicNegativityRegistry&) = default;

 private:
  std::map<std::string, Stat> stats_;
};

inline TopicNegativityRegistry compute_negativity(std::span<const Document> corpus) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& doc = corpus[i];
    if (!doc.topic) throw Error(describe(doc, i) + " has no topic");
    if (!doc.sentiment) throw Error(describe(doc, i) + " has no sentiment label");
    auto& [neg, total] = counts[*doc.topic];
    neg += *doc.sentiment == Sentiment::kNegative ? 1 : 0;
    total += 1;
  }
  TopicNegativityRegistry reg;
  for (const auto& [topic, c] : counts) reg.add(topic, c.first, c.second);
  return reg;
}

// Builds the feature vector of one normalized document.
inline FeatureVector vectorize(std::optional<std::string_view> topic,
                               const TokenSeq& tokens, const SpacePtr& space,
                               const SentimentLexicon& lex, const AuxLists& aux,
                               const TopicNegativityRegistry& registry,
                               const FeatureOptions& options = {}) {
  FeatureVector v(space);
  const auto groups = space->groups();

  if (groups.has(FeatureGroup::kUnigram)) {
    for (const auto& [term, m] : score_unigrams(tokens, lex, aux, options)) {
      const auto k = space->term_index(term);
      if (!k) continue;
      if (space->mode() == FeatureMode::kScore) {
        v.set(2 * *k, m.pos);
        v.set(2 * *k + 1, m.neg);
      } else {
        v.set(*k, static_cast<double>(m.count));
      }
    }
  }
  if (groups.has(FeatureGroup::kNegativity)) {
    std::optional<double> value;
    if (topic) value = registry.negativity(*topic);
    if (!value) {
      if (options.unknown_topic == UnknownTopicPolicy::kStrict) {
        throw Error(topic ? "topic '" + std::string(*topic) +
                                "' has no negativity value"
                          : std::string("document has no topic"));
      }
      value = options.unknown_topic_negativity;
    }
    v.set(*space->negativity_slot(), *value);
  }
  if (groups.has(FeatureGroup::kInterjection)) {
    v.set(*space->interjection_slot(),
          static_cast<double>(interjection_count(tokens, aux)));
  }
  if (groups.has(FeatureGroup::kQuestion)) {
    v.set(*space->question_slot(), question_flag(tokens, aux) ? 1.0 : 0.0);
  }
  return v;
}

inline FeatureVector vectorize(const Document& doc, const TokenSeq& tokens,
                               const SpacePtr& space, const SentimentLexicon& lex,
                               const AuxLists& aux,
                               const TopicNegativityRegistry& registry,
                               const FeatureOptions& options = {}) {
  std::optional<std::string_view> topic;
  if (doc.topic) topic = *doc.topic;
  return vectorize(topic, tokens, space, lex, aux, registry, options);
}

}  // namespace sarkas

#endif  // SARKAS_FEATURES_HPP_
