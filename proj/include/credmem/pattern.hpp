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

// A small regular-expression engine for credential formats.
//
// Supported: literals, escapes (\d \w \s and their negations, \t \n \r \xHH,
// escaped punctuation), bracket classes with ranges and negation, `.`,
// groups `( )` / `(?: )`, alternation, and the quantifiers `* + ? {n} {n,}
// {n,m}`. Anchors, backreferences, lookaround and lazy quantifiers are
// rejected. Matching runs a Thompson NFA over bytes, so it is linear in the
// scanned text for a fixed pattern.

#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace credmem {

using ByteSet = std::bitset<256>;

struct PatternNode {
  enum class Kind { Set, Concat, Alt, Repeat };
  Kind kind = Kind::Set;
  ByteSet set;                      // Kind::Set
  bool any = false;                 // Kind::Set produced by `.`
  std::vector<PatternNode> kids;    // Concat / Alt / Repeat (one kid)
  int min = 1;                      // Kind::Repeat
  int max = 1;                      // Kind::Repeat, -1 for unbounded
};

class Pattern {
 public:
  // Throws Error{InvalidPattern}.
  static Pattern parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  const PatternNode& root() const noexcept { return root_; }

  // Bytes that can start a match.
  const ByteSet& first_bytes() const noexcept { return first_; }

  // True when the whole of `s` is matched.
  bool full_match(std::string_view s) const;

  // Longest end position e > start such that text[start, e) matches and
  // accept_end(e) holds, or nullopt.
  std::optional<std::size_t> longest_at(std::string_view text, std::size_t start,
                                        const std::function<bool(std::size_t)>& accept_end) const;

  // Per-position byte sets of the fixed-width head (from_end=false) or tail
  // (from_end=true), stopping at the first variable-width element. The tail
  // is returned in text order.
  std::vector<ByteSet> fixed_edge(bool from_end) const;

  // Minimum and maximum match length; max is nullopt when unbounded.
  std::size_t min_length() const;
  std::optional<std::size_t> max_length() const;

 private:
  struct State {
    enum class Kind : std::uint8_t { Byte, Split, Match };
    Kind kind = Kind::Match;
    int set = -1;   // index into sets_
    int out = -1;
    int out1 = -1;
  };

  void compile();
  int add_state(State s);
  void add_closure(std::vector<int>& list, std::vector<std::uint32_t>& mark, std::uint32_t gen,
                   int state) const;

  std::string text_;
  PatternNode root_;
  ByteSet first_;
  std::vector<State> states_;
  std::vector<ByteSet> sets_;
  int start_ = -1;
};

// Options for random string generation from a pattern.
struct GenerateOptions {
  // Extra repetitions allowed above `min` for unbounded quantifiers.
  int unbounded_extra = 64;
};

// Draws a string from the pattern: uniform branch choice, uniform repeat
// count, uniform byte from each class. `.` emits a literal '.'.
// Throws Error{UnsupportedPattern} for negated classes that leave no
// printable byte.
std::string generate_from(const Pattern& pattern, std::mt19937_64& rng,
                          const GenerateOptions& options = {});

// Unbiased draw from [0, n).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace credmem
