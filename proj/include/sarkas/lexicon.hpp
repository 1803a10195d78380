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

// Translated sentiment lexicon and the auxiliary word lists (informal
// dictionary, negations, interjections, question words, context and affix
// overrides). Both structures are immutable once built.

#ifndef SARKAS_LEXICON_HPP_
#define SARKAS_LEXICON_HPP_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sarkas/common.hpp"

namespace sarkas {

struct LexiconEntry {
  std::string term;
  double pos_score = 0.0;
  double neg_score = 0.0;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// One translated row before merging. `line` is 0 when the triple did not
// come from a file.
struct RawTriple {
  std::string term;
  double pos_score = 0.0;
  double neg_score = 0.0;
  std::size_t line = 0;
};

class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  // Case-folded lookup.
  std::optional<LexiconEntry> lookup(std::string_view term) const {
    const auto it = entries_.find(text::to_lower(term));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(std::string_view term) const {
    return entries_.count(text::to_lower(term)) > 0;
  }

  // Number of translation rows averaged into `term`; 0 if absent.
  int source_count(std::string_view term) const {
    const auto it = source_count_.find(text::to_lower(term));
    return it == source_count_.end() ? 0 : it->second;
  }

  const std::map<std::string, LexiconEntry, std::less<>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Entries only; source counts are provenance and do not survive
  // serialization.
  friend bool operator==(const SentimentLexicon& a, const SentimentLexicon& b) {
    return a.entries_ == b.entries_;
  }

 private:
  friend SentimentLexicon merge_translations(std::span<const RawTriple>,
                                             std::string_view);

  std::map<std::string, LexiconEntry, std::less<>> entries_;
  std::map<std::string, int, std::less<>> source_count_;
};

namespace detail {

inline void check_term(std::string_view term, std::string_view source,
                       std::size_t line) {
  if (term.empty()) {
    throw ParseError(std::string(source), line, "empty term");
  }
  if (text::has_space(term)) {
    throw ParseError(std::string(source), line,
                     "term '" + std::string(term) + "' contains whitespace");
  }
}

inline void check_scores(const RawTriple& t, std::string_view source) {
  const auto bad = [&](const std::string& why) {
    throw ParseError(std::string(source), t.line,
                     "term '" + t.term + "': " + why);
  };
  if (!std::isfinite(t.pos_score) || t.pos_score < 0.0 || t.pos_score > 1.0) {
    bad("pos_score " + text::format_double(t.pos_score) +
        " outside [0,1]");
  }
  if (!std::isfinite(t.neg_score) || t.neg_score < 0.0 || t.neg_score > 1.0) {
    bad("neg_score " + text::format_double(t.neg_score) +
        " outside [0,1]");
  }
  // Objectivity absorbs the remainder, so the two channels may not exceed 1.
  if (t.pos_score + t.neg_score > 1.0 + 1e-12) {
    bad("pos_score + neg_score exceeds 1");
  }
}

// Word-list style parsing shared by every aux format: comments and blank
// lines skipped, fields split on tabs.
template <typename RowFn>
void for_each_row(std::string_view content, std::string_view source,
                  std::size_t expected_fields, RowFn&& fn) {
  std::size_t line_no = 0;
  for (auto line : io::lines(content)) {
    ++line_no;
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != expected_fields) {
      throw ParseError(std::string(source), line_no,
                       "expected " + std::to_string(expected_fields) +
                           " tab-separated columns, found " +
                           std::to_string(fields.size()));
    }
    for (auto& f : fields) f = text::trim(f);
    fn(fields, line_no);
  }
}

}  // namespace detail

// Averages every translation of a term. Scores are summed in sorted order so
// the floating-point result does not depend on input order.
inline SentimentLexicon merge_translations(std::span<const RawTriple> raw,
                                           std::string_view source = "<input>") {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
      grouped;
  for (const auto& t : raw) {
    detail::check_term(t.term, source, t.line);
    detail::check_scores(t, source);
    auto& [pos, neg] = grouped[text::to_lower(t.term)];
    pos.push_back(t.pos_score);
    neg.push_back(t.neg_score);
  }

  const auto mean = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };

  SentimentLexicon lex;
  for (auto& [term, channels] : grouped) {
    const int n = static_cast<int>(channels.first.size());
    lex.entries_.emplace(
        term, LexiconEntry{term, mean(channels.first), mean(channels.second)});
    lex.source_count_.emplace(term, n);
  }
  return lex;
}

inline std::vector<RawTriple> parse_lexicon_rows(std::string_view content,
                                                 std::string_view source) {
  std::vector<RawTriple> rows;
  detail::for_each_row(
      content, source, 3, [&](const auto& f, std::size_t line) {
        const auto pos = text::parse_double(f[1]);
        const auto neg = text::parse_double(f[2]);
        if (!pos || !neg) {
          throw ParseError(std::string(source), line, "score is not a number");
        }
        rows.push_back({text::to_lower(f[0]), *pos, *neg, line});
      });
  return rows;
}

inline SentimentLexicon parse_lexicon(std::string_view content,
                                      std::string_view source = "<lexicon>") {
  const auto rows = parse_lexicon_rows(content, source);
  return merge_translations(rows, source);
}

inline SentimentLexicon load_lexicon(const std::string& path) {
  return parse_lexicon(io::read_file(path), path);
}

// One merged row per term; loading the output reproduces every entry.
inline std::string serialize_lexicon(const SentimentLexicon& lex) {
  std::string out;
  for (const auto& [term, e] : lex.entries()) {
    out += term;
    out += '\t';
    out += text::format_double(e.pos_score);
    out += '\t';
    out += text::format_double(e.neg_score);
    out += '\n';
  }
  return out;
}

inline void save_lexicon(const SentimentLexicon& lex, const std::string& path) {
  io::write_file(path, serialize_lexicon(lex));
}

using ContextKey = std::pair<std::string, std::string>;

struct AuxLists {
  std::map<std::string, std::string> informal_dict;
  std::set<std::string> negations;
  std::set<std::string> interjections;
  std::set<std::string> question_words;
  // (context term, target term) -> signed score
  std::map<ContextKey, double> context_overrides;
  // surface term -> signed score
  std::map<std::string, double> affix_overrides;

  // Non-fatal findings from loading, e.g. informal entries that are not
  // fixed points.
  std::vector<std::string> warnings;

  bool operator==(const AuxLists& o) const {
    return informal_dict == o.informal_dict && negations == o.negations &&
           interjections == o.interjections &&
           question_words == o.question_words &&
           context_overrides == o.context_overrides &&
           affix_overrides == o.affix_overrides;
  }
};

inline std::map<std::string, std::string> parse_informal_dict(
    std::string_view content, std::string_view source = "<informal>") {
  std::map<std::string, std::string> dict;
  detail::for_each_row(content, source, 2, [&](const auto& f, std::size_t line) {
    detail::check_term(f[0], source, line);
    detail::check_term(f[1], source, line);
    dict[text::to_lower(f[0])] = text::to_lower(f[1]);
  });
  return dict;
}

inline std::set<std::string> parse_word_list(std::string_view content,
                                             std::string_view source = "<list>") {
  std::set<std::string> words;
  detail::for_each_row(content, source, 1, [&](const auto& f, std::size_t line) {
    detail::check_term(f[0], source, line);
    words.insert(text::to_lower(f[0]));
  });
  return words;
}

namespace detail {
inline double parse_signed_score(std::string_view field, std::string_view source,
                                 std::size_t line) {
  const auto v = text::parse_double(field);
  if (!v) throw ParseError(std::string(source), line, "score is not a number");
  if (*v < -1.0 || *v > 1.0) {
    throw ParseError(std::string(source), line,
                     "signed score " + std::string(field) + " outside [-1,1]");
  }
  return *v;
}
}  // namespace detail

inline std::map<ContextKey, double> parse_context_overrides(
    std::string_view content, std::string_view source = "<context>") {
  std::map<ContextKey, double> out;
  detail::for_each_row(content, source, 3, [&](const auto& f, std::size_t line) {
    detail::check_term(f[0], source, line);
    detail::check_term(f[1], source, line);
    out[{text::to_lower(f[0]), text::to_lower(f[1])}] =
        detail::parse_signed_score(f[2], source, line);
  });
  return out;
}

inline std::map<std::string, double> parse_affix_overrides(
    std::string_view content, std::string_view source = "<affix>") {
  std::map<std::string, double> out;
  detail::for_each_row(content, source, 2, [&](const auto& f, std::size_t line) {
    detail::check_term(f[0], source, line);
    out[text::to_lower(f[0])] = detail::parse_signed_score(f[1], source, line);
  });
  return out;
}

// Translation is a single non-transitive pass, so each formal value should
// not itself be rewritten by normalization.
inline std::vector<std::string> check_informal_fixed_points(
    const std::map<std::string, std::string>& dict) {
  std::vector<std::string> warnings;
  for (const auto& [informal, formal] : dict) {
    if (dict.count(formal)) {
      warnings.push_back("informal dictionary: value '" + formal + "' of '" +
                         informal + "' is itself a key");
    }
    bool digit = false;
    for (char c : formal) digit |= text::is_ascii_digit(c);
    if (digit) {
      warnings.push_back("informal dictionary: value '" + formal +
                         "' contains digits");
    }
  }
  return warnings;
}

struct AuxPaths {
  std::optional<std::string> informal_dict;
  std::optional<std::string> negations;
  std::optional<std::string> interjections;
  std::optional<std::string> question_words;
  std::optional<std::string> context_overrides;
  std::optional<std::string> affix_overrides;
};

// Missing paths leave the corresponding list empty.
inline AuxLists load_aux_lists(const AuxPaths& paths) {
  AuxLists aux;
  if (paths.informal_dict) {
    aux.informal_dict = parse_informal_dict(io::read_file(*paths.informal_dict),
                                            *paths.informal_dict);
  }
  if (paths.negations) {
    aux.negations =
        parse_word_list(io::read_file(*paths.negations), *paths.negations);
  }
  if (paths.interjections) {
    aux.interjections = parse_word_list(io::read_file(*paths.interjections),
                                        *paths.interjections);
  }
  if (paths.question_words) {
    aux.question_words = parse_word_list(io::read_file(*paths.question_words),
                                         *paths.question_words);
  }
  if (paths.context_overrides) {
    aux.context_overrides = parse_context_overrides(
        io::read_file(*paths.context_overrides), *paths.context_overrides);
  }
  if (paths.affix_overrides) {
    aux.affix_overrides = parse_affix_overrides(
        io::read_file(*paths.affix_overrides), *paths.affix_overrides);
  }
  aux.warnings = check_informal_fixed_points(aux.informal_dict);
  return aux;
}

inline std::string serialize_informal_dict(
    const std::map<std::string, std::string>& dict) {
  std::string out;
  for (const auto& [k, v] : dict) out += k + '\t' + v + '\n';
  return out;
}

inline std::string serialize_word_list(const std::set<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += w + '\n';
  return out;
}

inline std::string serialize_context_overrides(
    const std::map<ContextKey, double>& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    out += k.first + '\t' + k.second + '\t' + text::format_double(v) + '\n';
  }
  return out;
}

inline std::string serialize_affix_overrides(
    const std::map<std::string, double>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += k + '\t' + text::format_double(v) + '\n';
  return out;
}

// Standard file names used when a resource set is written to a directory.
struct ResourceFiles {
  static constexpr const char* kLexicon = "lexicon.tsv";
  static constexpr const char* kInformal = "informal_dict.tsv";
  static constexpr const char* kNegations = "negations.txt";
  static constexpr const char* kInterjections = "interjections.txt";
  static constexpr const char* kQuestionWords = "question_words.txt";
  static constexpr const char* kContext = "context_overrides.tsv";
  static constexpr const char* kAffix = "affix_overrides.tsv";
};

inline void save_resources(const SentimentLexicon& lex, const AuxLists& aux,
                           const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto p = [&](const char* name) { return dir + "/" + name; };
  save_lexicon(lex, p(ResourceFiles::kLexicon));
  io::write_file(p(ResourceFiles::kInformal),
                 serialize_informal_dict(aux.informal_dict));
  io::write_file(p(ResourceFiles::kNegations),
                 serialize_word_list(aux.negations));
  io::write_file(p(ResourceFiles::kInterjections),
                 serialize_word_list(aux.interjections));
  io::write_file(p(ResourceFiles::kQuestionWords),
                 serialize_word_list(aux.question_words));
  io::write_file(p(ResourceFiles::kContext),
                 serialize_context_overrides(aux.context_overrides));
  io::write_file(p(ResourceFiles::kAffix),
                 serialize_affix_overrides(aux.affix_overrides));
}

inline AuxPaths resource_paths(const std::string& dir) {
  const auto p = [&](const char* name) { return dir + "/" + name; };
  return AuxPaths{p(ResourceFiles::kInformal), p(ResourceFiles::kNegations),
                  p(ResourceFiles::kInterjections),
                  p(ResourceFiles::kQuestionWords), p(ResourceFiles::kContext),
                  p(ResourceFiles::kAffix)};
}

}  // namespace sarkas

#endif  // SARKAS_LEXICON_HPP_
