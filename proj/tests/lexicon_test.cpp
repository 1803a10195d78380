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


#include <algorithm>
#include <filesystem>

#include <gtest/gtest.h>

#include "sarkas/common.hpp"
#include "sarkas/lexicon.hpp"
#include "sarkas/resources.hpp"

namespace sarkas {
namespace {

TEST(Merge, SingleTranslation) {
  const std::vector<RawTriple> raw = {{"cocok", 0.5, 0.0, 0}};
  const auto lex = merge_translations(raw);
  ASSERT_TRUE(lex.lookup("cocok"));
  EXPECT_EQ(lex.lookup("cocok")->pos_score, 0.5);
  EXPECT_EQ(lex.lookup("cocok")->neg_score, 0.0);
}

TEST(Merge, AveragesTranslations) {
  const std::vector<RawTriple> raw = {{"memajukan", 0.5, 0.0, 0},
                                      {"memajukan", 0.25, 0.0, 0}};
  EXPECT_EQ(merge_translations(raw).lookup("memajukan")->pos_score, 0.375);

  const std::vector<RawTriple> mixed = {
      {"a", 0.2, 0.1, 0}, {"b", 0.0, 0.0, 0}, {"a", 0.4, 0.3, 0}};
  const auto lex = merge_translations(mixed);
  EXPECT_DOUBLE_EQ(lex.lookup("a")->pos_score, 0.3);
  EXPECT_DOUBLE_EQ(lex.lookup("a")->neg_score, 0.2);
  EXPECT_EQ(lex.lookup("b")->pos_score, 0.0);
  EXPECT_EQ(lex.source_count("a"), 2);
  EXPECT_EQ(lex.source_count("b"), 1);
  EXPECT_EQ(lex.source_count("zzz"), 0);
}

TEST(Merge, EmptyInputGivesEmptyLexicon) {
  EXPECT_TRUE(merge_translations({}).empty());
}

TEST(Merge, RejectsOutOfRangeScores) {
  const std::vector<RawTriple> bad = {{"x", 1.5, 0.0, 3}};
  try {
    merge_translations(bad, "lex.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
  const std::vector<RawTriple> over = {{"y", 0.75, 0.5, 1}};
  EXPECT_THROW(merge_translations(over), ParseError);
  const std::vector<RawTriple> negative = {{"y", -0.1, 0.0, 1}};
  EXPECT_THROW(merge_translations(negative), ParseError);
  const std::vector<RawTriple> spaced = {{"a b", 0.1, 0.0, 1}};
  EXPECT_THROW(merge_translations(spaced), ParseError);
}

TEST(Merge, MeanLiesBetweenExtremes) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RawTriple> raw;
    const auto n = 1 + rng.uniform(std::uint64_t{6});
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double p = rng.uniform01() * 0.5;
      raw.push_back({"t", p, rng.uniform01() * 0.5, 0});
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    const double m = merge_translations(raw).lookup("t")->pos_score;
    EXPECT_GE(m, lo);
    EXPECT_LE(m, hi);
  }
}

TEST(Merge, PermutationInvariant) {
  Rng rng(2);
  std::vector<RawTriple> raw;
  for (int i = 0; i < 60; ++i) {
    raw.push_back({"w" + std::to_string(i % 7), rng.uniform01() * 0.5,
                   rng.uniform01() * 0.5, 0});
  }
  const auto reference = merge_translations(raw);
  for (int s = 0; s < 100; ++s) {
    rng.shuffle(raw);
    const auto lex = merge_translations(raw);
    ASSERT_EQ(lex, reference);
    for (const auto& [term, e] : reference.entries()) {
      ASSERT_EQ(lex.source_count(term), reference.source_count(term));
    }
  }
}

TEST(Lookup, CaseFoldedAndMissing) {
  const auto lex = parse_lexicon("cocok\t0.5\t0.0\n");
  EXPECT_EQ(lex.lookup("COCOK"), lex.lookup("cocok"));
  EXPECT_FALSE(lex.lookup("zzz"));
  EXPECT_TRUE(lex.contains("Cocok"));
}

TEST(LexiconFile, ParsesCommentsAndBlankLines) {
  const auto lex = parse_lexicon("# header\n\ncocok\t0.5\t0.0\r\nbagus\t0.75\t0\n");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.lookup("bagus")->pos_score, 0.75);
}

TEST(LexiconFile, ErrorsNameFileAndLine) {
  try {
    parse_lexicon("cocok\t1.5\t0.0\n", "lex.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.file(), "lex.tsv");
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_lexicon("a\t0.1\t0\nb\t0.1\n", "lex.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_lexicon("a\tx\t0\n"), ParseError);
}

TEST(LexiconFile, RoundTrip) {
  const auto lex = bundled::lexicon();
  const auto again = parse_lexicon(serialize_lexicon(lex));
  EXPECT_EQ(again, lex);
  EXPECT_EQ(serialize_lexicon(again), serialize_lexicon(lex));
}

TEST(AuxFiles, InformalDictionary) {
  const auto dict = parse_informal_dict("cemungudh\tsemangat\nGA\ttidak\n");
  EXPECT_EQ(dict.at("cemungudh"), "semangat");
  EXPECT_EQ(dict.at("ga"), "tidak");
  EXPECT_THROW(parse_informal_dict("ga\n"), ParseError);
}

TEST(AuxFiles, InformalFixedPointWarnings) {
  EXPECT_TRUE(check_informal_fixed_points({{"ga", "tidak"}}).empty());
  EXPECT_EQ(check_informal_fixed_points({{"ga", "gk"}, {"gk", "tidak"}}).size(), 1u);
  EXPECT_EQ(check_informal_fixed_points({{"bgs", "b4gus"}}).size(), 1u);
  EXPECT_TRUE(check_informal_fixed_points(bundled::aux_lists().informal_dict).empty());
}

TEST(AuxFiles, Overrides) {
  const auto ctx = parse_context_overrides("harga\tmahasiswa\t0.5\n");
  EXPECT_EQ(ctx.at({"harga", "mahasiswa"}), 0.5);
  const auto affix = parse_affix_overrides("murahan\t-0.5\n");
  EXPECT_EQ(affix.at("murahan"), -0.5);
  EXPECT_THROW(parse_affix_overrides("murahan\t-1.5\n"), ParseError);
  EXPECT_THROW(parse_context_overrides("harga\t0.5\n"), ParseError);
}

TEST(AuxFiles, WordLists) {
  const auto words = parse_word_list("# negations\ntidak\nBukan\n\n");
  EXPECT_EQ(words, (std::set<std::string>{"bukan", "tidak"}));
  EXPECT_THROW(parse_word_list("tidak bukan\n"), ParseError);
}

TEST(Resources, SaveAndLoadDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "sarkas_lexicon_test";
  std::filesystem::remove_all(dir);
  const auto lex = bundled::lexicon();
  const auto aux = bundled::aux_lists();
  save_resources(lex, aux, dir.string());
  EXPECT_EQ(load_lexicon((dir / ResourceFiles::kLexicon).string()), lex);
  EXPECT_EQ(load_aux_lists(resource_paths(dir.string())), aux);
  std::filesystem::remove_all(dir);
}

TEST(Resources, MissingPathsGiveEmptyLists) {
  const auto aux = load_aux_lists({});
  EXPECT_TRUE(aux.negations.empty());
  EXPECT_TRUE(aux.informal_dict.empty());
  AuxPaths p;
  p.negations = "/nonexistent/negations.txt";
  EXPECT_THROW(load_aux_lists(p), Error);
}

TEST(Bundled, AveragedTermsAndSlang) {
  const auto lex = bundled::lexicon();
  EXPECT_EQ(lex.lookup("cocok")->pos_score, 0.5);
  EXPECT_EQ(lex.lookup("memajukan")->pos_score, 0.375);
  EXPECT_EQ(bundled::aux_lists().informal_dict.at("cemungudh"), "semangat");
}

}  // namespace
}  // namespace sarkas
