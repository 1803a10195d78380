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

// Bundled Indonesian resources: a small pre-translated lexicon and the word
// lists the synthetic corpus generator draws from. The files under data/
// are these tables written out by `sarkas gen-corpus --resources-dir`.

#ifndef SARKAS_RESOURCES_HPP_
#define SARKAS_RESOURCES_HPP_

#include <string>
#include <vector>

#include "sarkas/lexicon.hpp"

namespace sarkas::bundled {

struct ScoredWord {
  std::string term;
  double pos;
  double neg;
};

inline const std::vector<ScoredWord>& strong_positive() {
  static const std::vector<ScoredWord> w = {
      {"bagus", 0.75, 0.0},    {"hebat", 0.75, 0.0},    {"cantik", 0.625, 0.0},
      {"keren", 0.625, 0.0},   {"cocok", 0.5, 0.0},     {"senang", 0.75, 0.0},
      {"suka", 0.5, 0.0},      {"mantap", 0.625, 0.0},  {"enak", 0.625, 0.0},
      {"jago", 0.5, 0.0},      {"indah", 0.75, 0.0},    {"puas", 0.625, 0.0},
      {"lucu", 0.5, 0.0},      {"ramah", 0.5, 0.0},     {"pintar", 0.625, 0.0},
      {"sukses", 0.75, 0.0},   {"berhasil", 0.625, 0.0}, {"menang", 0.625, 0.0},
      {"nyaman", 0.5, 0.0},    {"bersih", 0.5, 0.0},    {"semangat", 0.5, 0.0},
      {"bahagia", 0.875, 0.0}, {"gembira", 0.75, 0.0},  {"juara", 0.625, 0.0},
      {"murah", 0.5, 0.0},     {"cepat", 0.5, 0.0},     {"ganteng", 0.625, 0.0},
  };
  return w;
}

inline const std::vector<ScoredWord>& strong_negative() {
  static const std::vector<ScoredWord> w = {
      {"jelek", 0.0, 0.75},   {"buruk", 0.0, 0.75},   {"gagal", 0.0, 0.625},
      {"kecewa", 0.0, 0.75},  {"mahal", 0.0, 0.5},    {"benci", 0.0, 0.875},
      {"bosan", 0.0, 0.5},    {"kotor", 0.0, 0.625},  {"lambat", 0.0, 0.5},
      {"parah", 0.0, 0.625},  {"rusak", 0.0, 0.625},  {"sedih", 0.0, 0.75},
      {"marah", 0.0, 0.625},  {"bodoh", 0.0, 0.75},   {"payah", 0.0, 0.625},
      {"korupsi", 0.0, 0.75}, {"bohong", 0.0, 0.75},  {"lemah", 0.0, 0.5},
      {"kalah", 0.0, 0.5},    {"malas", 0.0, 0.5},    {"buron", 0.0, 0.625},
      {"lelet", 0.0, 0.5},    {"sombong", 0.0, 0.625},
  };
  return w;
}

// Everyday words that most negated opinions are built on ("tidak bagus").
inline const std::vector<std::string>& common_positive() {
  static const std::vector<std::string> w = {"bagus", "suka", "enak", "senang", "puas"};
  return w;
}

inline const std::vector<std::string>& common_negative() {
  static const std::vector<std::string> w = {"jelek", "buruk", "mahal", "lambat", "bosan"};
  return w;
}

// Low-score words that carry little sentiment.
inline const std::vector<ScoredWord>& weak_words() {
  static const std::vector<ScoredWord> w = {
      {"bisa", 0.125, 0.0},  {"baru", 0.125, 0.0}, {"cukup", 0.25, 0.0},
      {"boleh", 0.125, 0.0}, {"lumayan", 0.25, 0.0}, {"mungkin", 0.125, 0.0},
      {"biasa", 0.0, 0.125}, {"lama", 0.0, 0.125},  {"jarang", 0.0, 0.25},
      {"agak", 0.0, 0.125},  {"kurang", 0.0, 0.25},
  };
  return w;
}

// Lexicon terms with no sentiment at all.
inline const std::vector<std::string>& objective_words() {
  static const std::vector<std::string> w = {
      "berita", "acara",  "hari",    "kota",      "presiden", "film",
      "makanan", "harga", "mahasiswa", "orang",   "rumah",    "jalan",
      "tahun",  "minggu", "pagi",    "malam",     "cuaca",    "jadwal",
      "informasi", "kabar", "pelanggan", "kantor", "sekolah", "lagu",
      "pertandingan", "pasangan", "televisi", "jaman", "cara", "pemain",
  };
  return w;
}

// Translation rows. Several terms have more than one translation and are
// averaged on load ("memajukan" -> 0.375).
inline std::vector<RawTriple> lexicon_rows() {
  std::vector<RawTriple> rows;
  for (const auto* pool : {&strong_positive(), &strong_negative(), &weak_words()}) {
    for (const auto& w : *pool) rows.push_back({w.term, w.pos, w.neg, 0});
  }
  for (const auto& w : objective_words()) rows.push_back({w, 0.0, 0.0, 0});
  rows.push_back({"memajukan", 0.25, 0.0, 0});
  rows.push_back({"memajukan", 0.5, 0.0, 0});
  rows.push_back({"ramah", 0.625, 0.0, 0});
  rows.push_back({"ramah", 0.375, 0.0, 0});
  rows.push_back({"murahan", 0.25, 0.0, 0});
  return rows;
}

inline SentimentLexicon lexicon() {
  const auto rows = lexicon_rows();
  return merge_translations(rows, "<bundled>");
}

inline const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> w = {
      "dan", "di", "yang", "untuk", "ini", "itu", "ke", "dari", "dengan",
      "saya", "kamu", "dia", "kita", "akan", "sudah", "lagi", "saja", "ada",
      "karena", "tapi", "sama", "mau", "jadi", "pada", "kalau", "memang",
      "sih", "deh", "kok", "ya", "nanti", "sekarang", "juga",
  };
  return w;
}

inline const std::vector<std::string>& intensifiers() {
  static const std::vector<std::string> w = {"banget", "sekali", "sangat",
                                             "makin", "paling"};
  return w;
}

// Opinion words that are not in the lexicon.
inline const std::vector<std::string>& slang_positive() {
  static const std::vector<std::string> w = {"asik", "kece", "gokil", "top"};
  return w;
}
inline const std::vector<std::string>& slang_negative() {
  static const std::vector<std::string> w = {"ngeselin", "nyebelin", "zonk", "ampas"};
  return w;
}

inline AuxLists aux_lists() {
  AuxLists aux;
  aux.informal_dict = {
      {"ga", "tidak"},      {"gak", "tidak"},     {"nggak", "tidak"},
      {"enggak", "tidak"},  {"tdk", "tidak"},     {"gk", "tidak"},
      {"bgt", "banget"},    {"bngt", "banget"},   {"gw", "saya"},
      {"gue", "saya"},      {"sy", "saya"},       {"lu", "kamu"},
      {"loe", "kamu"},      {"yg", "yang"},       {"aja", "saja"},
      {"udah", "sudah"},    {"udh", "sudah"},     {"kalo", "kalau"},
      {"gitu", "begitu"},   {"dgn", "dengan"},    {"jg", "juga"},
      {"bgs", "bagus"},     {"mantul", "mantap"}, {"cemungudh", "semangat"},
      {"krn", "karena"},    {"tp", "tapi"},       {"sm", "sama"},
      {"bener", "benar"},   {"emang", "memang"},  {"cakep", "cantik"},
      {"seneng", "senang"}, {"males", "malas"},   {"ngga", "tidak"},
      {"dr", "dari"},       {"skrg", "sekarang"}, {"bosen", "bosan"},
  };
  aux.negations = {"tidak", "bukan", "belum", "jangan", "tanpa"};
  aux.interjections = {"aha", "bah", "nah", "wew", "wow", "yay", "uh",  "wah",
                       "jir", "duh", "cie", "hore", "astaga", "ih", "lho"};
  aux.question_words = {"siapa", "apa",    "kapan", "bagaimana",
                        "dimana", "mengapa", "kenapa", "berapa"};
  aux.context_overrides = {
      {{"harga", "mahasiswa"}, 0.5},
      {{"harga", "teman"}, 0.5},
      {{"kurang", "ajar"}, -0.75},
      {{"keras", "kepala"}, -0.5},
      {{"panjang", "umur"}, 0.5},
  };
  aux.affix_overrides = {
      {"murahan", -0.5},
      {"kampungan", -0.625},
      {"bagusan", 0.5},
      {"lebayan", -0.375},
  };
  return aux;
}

}  // namespace sarkas::bundled

#endif  // SARKAS_RESOURCES_HPP_
