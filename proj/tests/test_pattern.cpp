/*
 * Copyright 2026 The credmem Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "credmem/error.hpp"
#include "credmem/pattern.hpp"

namespace credmem {
namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::Io;
}

TEST(Pattern, FullMatchBasics) {
  const auto p = Pattern::parse("AKIA[0-9A-Z]{16}");
  EXPECT_TRUE(p.full_match("AKIAABCD1234EFGH5678"));
  EXPECT_FALSE(p.full_match("AKIAABCD1234EFGH567"));
  EXPECT_FALSE(p.full_match("AKIAABCD1234EFGH56789"));
  EXPECT_FALSE(p.full_match("AKIAabcd1234EFGH5678"));
  EXPECT_EQ(p.min_length(), 20u);
  EXPECT_EQ(p.max_length(), 20u);
}

TEST(Pattern, ClassSyntax) {
  // Verbatim quirks of real credential patterns.
  const auto slack = Pattern::parse("xox[p|b|o|a]-[0-9]{2}");
  EXPECT_TRUE(slack.full_match("xoxp-12"));
  EXPECT_TRUE(slack.full_match("xox|-12"));
  EXPECT_FALSE(slack.full_match("xoxq-12"));

  const auto trailing_dash = Pattern::parse("[0-9a-zA-Z_-]{3}");
  EXPECT_TRUE(trailing_dash.full_match("a-_"));
  const auto escaped = Pattern::parse(R"([a-zA-Z0-9_\-]{2}\/[+\/]\\)");
  EXPECT_TRUE(escaped.full_match("-_/+\\"));
  EXPECT_TRUE(Pattern::parse(R"([^a-z]\d\w\s\x41)").full_match("Z5_ A"));
  EXPECT_TRUE(Pattern::parse("(?:ab|cd)+e?").full_match("abcdab"));
  EXPECT_TRUE(Pattern::parse("a{2,}").full_match("aaaaa"));
  EXPECT_FALSE(Pattern::parse("a{2,}").full_match("a"));
}

TEST(Pattern, DotMatchesAnyByteButNewline) {
  const auto p = Pattern::parse("a.c");
  EXPECT_TRUE(p.full_match("a.c"));
  EXPECT_TRUE(p.full_match("axc"));
  EXPECT_FALSE(p.full_match("a\nc"));
}

TEST(Pattern, RejectsOutsideDialect) {
  for (const char* bad : {"^abc", "abc$", "(a)\\1", "(?=a)b", "a+?", "[abc", "(ab", "ab)", "a{3,2}",
                          "*a", "", "a{0}", "x?", "\\q", "[z-a]"}) {
    EXPECT_EQ(code_of([&] { Pattern::parse(bad); }), Errc::InvalidPattern) << bad;
  }
}

TEST(Pattern, LongestAtHonoursEndPredicate) {
  const auto p = Pattern::parse("[a-z]{2,4}");
  const std::string_view text = "abcdef";
  EXPECT_EQ(p.longest_at(text, 0, [](std::size_t) { return true; }), 4u);
  EXPECT_EQ(p.longest_at(text, 0, [](std::size_t e) { return e == 3; }), 3u);
  EXPECT_EQ(p.longest_at(text, 0, [](std::size_t e) { return e == 6; }), std::nullopt);
  EXPECT_EQ(p.longest_at(text, 6, [](std::size_t) { return true; }), std::nullopt);
}

TEST(Pattern, FixedEdges) {
  const auto p = Pattern::parse(R"([0-9]{11,13}-[a-z0-9]{32}\.apps\.googleusercontent\.com)");
  const auto head = p.fixed_edge(false);
  EXPECT_EQ(head.size(), 11u);
  const auto tail = p.fixed_edge(true);
  ASSERT_GE(tail.size(), 27u);
  const std::string suffix = ".apps.googleusercontent.com";
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    const auto& s = tail[tail.size() - suffix.size() + i];
    EXPECT_EQ(s.count(), 1u);
    EXPECT_TRUE(s.test(static_cast<unsigned char>(suffix[i])));
  }
  EXPECT_TRUE(Pattern::parse("(a|b)c").fixed_edge(false).empty());
}

TEST(Pattern, GeneratorStaysInsidePattern) {
  std::mt19937_64 rng(42);
  for (const char* text : {"AKIA[0-9A-Z]{16}", "EAACEdEose0cBA[0-9A-Za-z]+", "(?:ab|cd){1,3}[^a-z]x?",
                           R"(https:\/\/hooks.slack.com\/services\/[A-Za-z0-9+\/]{44,46})"}) {
    const auto p = Pattern::parse(text);
    for (int i = 0; i < 200; ++i) {
      const std::string s = generate_from(p, rng);
      ASSERT_TRUE(p.full_match(s)) << text << " -> " << s;
    }
  }
  GenerateOptions bounded;
  bounded.unbounded_extra = 0;
  EXPECT_EQ(generate_from(Pattern::parse("x+"), rng, bounded), "x");
}

TEST(Pattern, GeneratorRejectsUnprintableOnlyClass) {
  std::mt19937_64 rng(1);
  const auto p = Pattern::parse(R"(\x01)");
  EXPECT_EQ(code_of([&] { generate_from(p, rng); }), Errc::UnsupportedPattern);
}

TEST(Pattern, UniformBelowCoversRange) {
  std::mt19937_64 rng(9);
  std::array<int, 7> seen{};
  for (int i = 0; i < 7000; ++i) ++seen[uniform_below(rng, 7)];
  for (int n : seen) EXPECT_GT(n, 800);
  EXPECT_EQ(uniform_below(rng, 1), 0u);
}

// Second route: the same patterns through std::regex (ECMAScript) must agree
// on whole-string membership for random probes.
TEST(Pattern, AgreesWithStdRegexOnMembership) {
  std::mt19937_64 rng(17);
  const std::vector<std::string> patterns = {"AKIA[0-9A-Z]{4}", "xox[p|b|o|a]-[0-9]{2}", "[a-c]{1,3}d?",
                                             "(ab|a)(bc|c)", "sk_test_[0-9a-zA-Z]{3}"};
  const std::string alphabet = "AKIabcdxopk|-0123_stey";
  for (const auto& text : patterns) {
    const auto mine = Pattern::parse(text);
    const std::regex theirs(text, std::regex::ECMAScript);
    for (int i = 0; i < 3000; ++i) {
      std::string probe = (i % 3 == 0) ? generate_from(mine, rng) : std::string();
      const std::size_t extra = rng() % 4;
      for (std::size_t k = 0; k < extra || probe.empty(); ++k) probe.push_back(alphabet[rng() % alphabet.size()]);
      ASSERT_EQ(mine.full_match(probe), std::regex_match(probe, theirs)) << text << " on " << probe;
    }
  }
}

}  // namespace
}  // namespace credmem
