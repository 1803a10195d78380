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

// Labeled documents and the JSONL corpus format:
//   {"text": str, "topic": str|null, "sentiment": "pos"|"neg"|"neu"|null,
//    "sarcasm": true|false|null}

#ifndef SARKAS_DOCUMENT_HPP_
#define SARKAS_DOCUMENT_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sarkas/common.hpp"

namespace sarkas {

// Index order doubles as the class index of three-way sentiment models, so
// ties resolve towards neutral.
enum class Sentiment { kNeutral = 0, kPositive = 1, kNegative = 2 };

inline constexpr std::array<Sentiment, 3> kAllSentiments = {
    Sentiment::kNeutral, Sentiment::kPositive, Sentiment::kNegative};

inline std::string_view sentiment_code(Sentiment s) {
  switch (s) {
    case Sentiment::kNeutral: return "neu";
    case Sentiment::kPositive: return "pos";
    case Sentiment::kNegative: return "neg";
  }
  return "neu";
}

inline std::optional<Sentiment> parse_sentiment(std::string_view code) {
  if (code == "neu" || code == "neutral") return Sentiment::kNeutral;
  if (code == "pos" || code == "positive") return Sentiment::kPositive;
  if (code == "neg" || code == "negative") return Sentiment::kNegative;
  return std::nullopt;
}

struct Document {
  std::string text;
  std::optional<std::string> topic;
  std::optional<Sentiment> sentiment;
  std::optional<bool> sarcasm;

  friend bool operator==(const Document&, const Document&) = default;
};

// Human-readable handle for error messages.
inline std::string describe(const Document& doc, std::size_t index) {
  std::string snippet = doc.text.substr(0, 40);
  if (doc.text.size() > 40) snippet += "...";
  return "document #" + std::to_string(index) + " (\"" + snippet + "\")";
}

// Label a fully resolved pipeline should emit: sarcastic positives count as
// negative.
inline std::optional<Sentiment> gold_final_label(const Document& doc) {
  if (!doc.sentiment) return std::nullopt;
  if (*doc.sentiment == Sentiment::kPositive && doc.sarcasm.value_or(false)) {
    return Sentiment::kNegative;
  }
  return doc.sentiment;
}

inline nlohmann::json to_json(const Document& doc) {
  nlohmann::json j;
  j["text"] = doc.text;
  j["topic"] = doc.topic ? nlohmann::json(*doc.topic) : nlohmann::json(nullptr);
  j["sentiment"] = doc.sentiment
                       ? nlohmann::json(std::string(sentiment_code(*doc.sentiment)))
                       : nlohmann::json(nullptr);
  j["sarcasm"] = doc.sarcasm ? nlohmann::json(*doc.sarcasm) : nlohmann::json(nullptr);
  return j;
}

inline Document document_from_json(const nlohmann::json& j,
                                   const std::string& source, std::size_t line) {
  if (!j.is_object()) throw ParseError(source, line, "expected a JSON object");
  Document doc;
  const auto text = j.find("text");
  if (text == j.end() || !text->is_string()) {
    throw ParseError(source, line, "missing string field \"text\"");
  }
  doc.text = text->get<std::string>();
  if (const auto t = j.find("topic"); t != j.end() && !t->is_null()) {
    if (!t->is_string()) throw ParseError(source, line, "\"topic\" must be a string");
    doc.topic = t->get<std::string>();
  }
  if (const auto s = j.find("sentiment"); s != j.end() && !s->is_null()) {
    const auto parsed =
        s->is_string() ? parse_sentiment(s->get<std::string>()) : std::nullopt;
    if (!parsed) {
      throw ParseError(source, line,
                       "\"sentiment\" must be \"pos\", \"neg\", \"neu\" or null");
    }
    doc.sentiment = parsed;
  }
  if (const auto s = j.find("sarcasm"); s != j.end() && !s->is_null()) {
    if (!s->is_boolean()) throw ParseError(source, line, "\"sarcasm\" must be a boolean");
    doc.sarcasm = s->get<bool>();
  }
  return doc;
}

inline std::vector<Document> parse_corpus(std::string_view content,
                                          const std::string& source = "<corpus>") {
  std::vector<Document> docs;
  std::size_t line_no = 0;
  for (auto line : io::lines(content)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source, line_no, std::string("invalid JSON: ") + e.what());
    }
    docs.push_back(document_from_json(j, source, line_no));
  }
  return docs;
}

inline std::vector<Document> load_corpus(const std::string& path) {
  return parse_corpus(io::read_file(path), path);
}

inline std::string serialize_corpus(std::span<const Document> docs) {
  std::string out;
  for (const auto& d : docs) {
    out += to_json(d).dump();
    out += '\n';
  }
  return out;
}

inline void save_corpus(std::span<const Document> docs, const std::string& path) {
  io::write_file(path, serialize_corpus(docs));
}

}  // namespace sarkas

#endif  // SARKAS_DOCUMENT_HPP_
