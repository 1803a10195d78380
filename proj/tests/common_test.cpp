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
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "sarkas/common.hpp"

namespace sarkas {
namespace {

TEST(Text, LowerAndTrim) {
  EXPECT_EQ(text::to_lower("GaGaL 2x"), "gagal 2x");
  EXPECT_EQ(text::trim("  a b\t\n"), "a b");
  EXPECT_EQ(text::trim("   "), "");
  EXPECT_TRUE(text::has_space("a b"));
  EXPECT_FALSE(text::has_space("ab"));
}

TEST(Text, SplitKeepsEmptyFields) {
  const auto parts = text::split("a\t\tb", '\t');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[1], "");
  EXPECT_EQ(text::join({"x", "y", "z"}, "-"), "x-y-z");
}

TEST(Text, ParseDoubleIsStrict) {
  EXPECT_EQ(text::parse_double("0.375"), 0.375);
  EXPECT_EQ(text::parse_double("-1"), -1.0);
  EXPECT_FALSE(text::parse_double(""));
  EXPECT_FALSE(text::parse_double("0.5x"));
  EXPECT_FALSE(text::parse_double("nan"));
  EXPECT_FALSE(text::parse_double("inf"));
  EXPECT_EQ(text::parse_int("12"), 12);
  EXPECT_FALSE(text::parse_int("1.5"));
}

TEST(Text, FormatDoubleRoundTrips) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform(-12.0, 3.0));
    const auto s = text::format_double(x);
    ASSERT_EQ(text::parse_double(s), x) << s;
  }
  EXPECT_EQ(text::format_double(0.5), "0.5");
  EXPECT_EQ(text::format_double(0.0), "0");
}

TEST(Lines, HandlesCrlfAndMissingTrailingNewline) {
  const auto ls = io::lines("a\r\nb\nc");
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "a");
  EXPECT_EQ(ls[2], "c");
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, SplitsAreIndependentOfParentUse) {
  Rng parent(5);
  const auto child1 = parent.split("train").next();
  const auto child2 = parent.split("train").next();
  EXPECT_EQ(child1, child2);
  EXPECT_NE(parent.split("train").next(), parent.split("test").next());
  EXPECT_NE(parent.split(0).next(), parent.split(1).next());
}

TEST(Rng, UniformStaysInRangeAndCoversIt) {
  Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto x = rng.uniform(std::uint64_t{7});
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  // Chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile.
  double chi2 = 0.0;
  for (int h : hits) chi2 += (h - 10000.0) * (h - 10000.0) / 10000.0;
  EXPECT_LT(chi2, 22.46);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, ShuffleIsAPermutation) {
  Rng rng(3);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  rng.shuffle(w);
  EXPECT_NE(v, w);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(v, w);
}

TEST(Errors, ParseErrorCarriesLocation) {
  const ParseError e("lex.tsv", 4, "bad score");
  EXPECT_EQ(e.file(), "lex.tsv");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_NE(std::string(e.what()).find("lex.tsv:4"), std::string::npos);
}

}  // namespace
}  // namespace sarkas
