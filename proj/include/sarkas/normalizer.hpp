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

// Social-media text normalization: tokenization, numeric-to-letter
// conversion, vowel-run collapsing and informal-to-formal translation.
// Every function here is pure.

#ifndef SARKAS_NORMALIZER_HPP_
#define SARKAS_NORMALIZER_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sarkas/common.hpp"
#include "sarkas/lexicon.hpp"

namespace sarkas {

using TokenSeq = std::vector<std::string>;

struct NormalizerOptions {
  // Runs of at least this many identical vowels collapse to one.
  std::size_t vowel_run_threshold = 3;
};

namespace detail {

inline bool all_punct(std::string_view s) {
  for (char c : s) {
    if (!text::is_punct(c)) return false;
  }
  return !s.empty();
}

// Emoticon-like: leads with punctuation and has at most one word character,
// e.g. ":p", ";d", ":-)".
inline bool is_emoticon(std::string_view s) {
  if (s.empty() || !text::is_punct(s.front())) return false;
  std::size_t word_chars = 0;
  for (char c : s) word_chars += text::is_punct(c) ? 0 : 1;
  return word_chars <= 1;
}

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace detail

// Whitespace split, lowercase, and trimming of leading/trailing punctuation.
// Punctuation-only and emoticon tokens are kept whole.
inline TokenSeq tokenize(std::string_view text) {
  TokenSeq tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text::is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !text::is_space(text[i])) ++i;
    if (start == i) break;
    std::string_view raw = text.substr(start, i - start);
    if (detail::all_punct(raw) || detail::is_emoticon(raw)) {
      tokens.push_back(text::to_lower(raw));
      continue;
    }
    while (!raw.empty() && text::is_punct(raw.front())) raw.remove_prefix(1);
    while (!raw.empty() && text::is_punct(raw.back())) raw.remove_suffix(1);
    if (!raw.empty()) tokens.push_back(text::to_lower(raw));
  }
  return tokens;
}

// "ga2l" -> "gagal": a '2' after two letters repeats those two letters.
// Other digits go through the leet table; pure numbers are left alone.
inline std::string convert_numerics(std::string_view token) {
  bool any_digit = false;
  bool all_digit = !token.empty();
  for (char c : token) {
    const bool d = text::is_ascii_digit(c);
    any_digit |= d;
    all_digit &= d;
  }
  if (!any_digit || all_digit) return std::string(token);

  std::string out;
  out.reserve(token.size() + 4);
  for (char c : token) {
    switch (c) {
      case '2': {
        const auto n = out.size();
        if (n >= 2 && text::is_ascii_alpha(out[n - 2]) &&
            text::is_ascii_alpha(out[n - 1])) {
          out += out.substr(n - 2, 2);
        } else {
          out += c;
        }
        break;
      }
      case '0': out += 'o'; break;
      case '1': out += 'i'; break;
      case '3': out += 'e'; break;
      case '4': out += 'a'; break;
      case '5': out += 's'; break;
      case '7': out += 't'; break;
      default: out += c; break;
    }
  }
  return out;
}

inline std::string collapse_vowel_runs(std::string_view token,
                                       std::size_t threshold = 3) {
  std::string out;
  out.reserve(token.size());
  std::size_t i = 0;
  while (i < token.size()) {
    std::size_t j = i + 1;
    while (j < token.size() && token[j] == token[i]) ++j;
    const std::size_t run = j - i;
    if (detail::is_vowel(token[i]) && run >= threshold) {
      out += token[i];
    } else {
      out.append(token.substr(i, run));
    }
    i = j;
  }
  return out;
}

// Single pass; a translated token is never looked up again.
inline TokenSeq translate_informal(
    const TokenSeq& tokens, const std::map<std::string, std::string>& dict) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    const auto it = dict.find(t);
    out.push_back(it == dict.end() ? t : it->second);
  }
  return out;
}

inline TokenSeq normalize(std::string_view text, const AuxLists& aux,
                          const NormalizerOptions& options = {}) {
  TokenSeq tokens = tokenize(text);
  for (auto& t : tokens) {
    // Emoticons and punctuation runs skip the letter rewrites.
    if (text::is_punct(t.front())) continue;
    t = collapse_vowel_runs(convert_numerics(t), options.vowel_run_threshold);
  }
  return translate_informal(tokens, aux.informal_dict);
}

}  // namespace sarkas

#endif  // SARKAS_NORMALIZER_HPP_
