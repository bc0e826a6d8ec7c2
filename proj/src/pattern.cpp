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

#include "credmem/pattern.hpp"

#include <algorithm>
#include <limits>

#include "credmem/error.hpp"

namespace credmem {
namespace {

constexpr int kMaxRepeat = 1000;

ByteSet range_set(unsigned char lo, unsigned char hi) {
  ByteSet s;
  for (int c = lo; c <= hi; ++c) s.set(static_cast<std::size_t>(c));
  return s;
}

ByteSet digit_set() { return range_set('0', '9'); }
ByteSet word_set() { return range_set('a', 'z') | range_set('A', 'Z') | digit_set() | range_set('_', '_'); }
ByteSet space_set() {
  ByteSet s;
  for (unsigned char c : std::string_view(" \t\n\r\f\v")) s.set(c);
  return s;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PatternNode parse() {
    PatternNode node = alternation();
    if (pos_ != text_.size()) fail("unbalanced ')'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::InvalidPattern,
                "'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  PatternNode alternation() {
    std::vector<PatternNode> branches;
    branches.push_back(concatenation());
    while (!at_end() && peek() == '|') {
      ++pos_;
      branches.push_back(concatenation());
    }
    if (branches.size() == 1) return std::move(branches.front());
    PatternNode node;
    node.kind = PatternNode::Kind::Alt;
    node.kids = std::move(branches);
    return node;
  }

  PatternNode concatenation() {
    PatternNode node;
    node.kind = PatternNode::Kind::Concat;
    while (!at_end() && peek() != '|' && peek() != ')') node.kids.push_back(repetition());
    if (node.kids.empty()) fail("empty expression");
    if (node.kids.size() == 1) return std::move(node.kids.front());
    return node;
  }

  int number() {
    const std::size_t begin = pos_;
    long value = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + (peek() - '0');
      if (value > kMaxRepeat) fail("repetition count too large");
      ++pos_;
    }
    if (pos_ == begin) fail("expected a number");
    return static_cast<int>(value);
  }

  PatternNode repetition() {
    PatternNode atom_node = atom();
    while (!at_end()) {
      int lo = 0;
      int hi = 0;
      const char c = peek();
      if (c == '*') {
        lo = 0, hi = -1, ++pos_;
      } else if (c == '+') {
        lo = 1, hi = -1, ++pos_;
      } else if (c == '?') {
        lo = 0, hi = 1, ++pos_;
      } else if (c == '{') {
        ++pos_;
        lo = number();
        hi = lo;
        if (!at_end() && peek() == ',') {
          ++pos_;
          hi = (!at_end() && peek() == '}') ? -1 : number();
        }
        if (at_end() || peek() != '}') fail("unterminated '{'");
        ++pos_;
        if (hi != -1 && hi < lo) fail("repetition bounds out of order");
      } else {
        break;
      }
      if (!at_end() && (peek() == '?' || peek() == '+') && c != '?') {
        fail("lazy or possessive quantifiers are not supported");
      }
      PatternNode rep;
      rep.kind = PatternNode::Kind::Repeat;
      rep.min = lo;
      rep.max = hi;
      rep.kids.push_back(std::move(atom_node));
      atom_node = std::move(rep);
    }
    return atom_node;
  }

  PatternNode set_node(ByteSet s, bool any = false) {
    PatternNode node;
    node.kind = PatternNode::Kind::Set;
    node.set = s;
    node.any = any;
    return node;
  }

  // Escape after the backslash; returns a set.
  ByteSet escape(bool in_class) {
    if (at_end()) fail("trailing backslash");
    const char c = text_[pos_++];
    switch (c) {
      case 'd': return digit_set();
      case 'D': return ~digit_set();
      case 'w': return word_set();
      case 'W': return ~word_set();
      case 's': return space_set();
      case 'S': return ~space_set();
      case 't': return range_set('\t', '\t');
      case 'n': return range_set('\n', '\n');
      case 'r': return range_set('\r', '\r');
      case 'f': return range_set('\f', '\f');
      case 'v': return range_set('\v', '\v');
      case 'x': {
        if (pos_ + 2 > text_.size()) fail("short \\x escape");
        const int hi = hex_value(text_[pos_]);
        const int lo = hex_value(text_[pos_ + 1]);
        if (hi < 0 || lo < 0) fail("bad \\x escape");
        pos_ += 2;
        const auto b = static_cast<unsigned char>(hi * 16 + lo);
        return range_set(b, b);
      }
      case 'b':
        if (in_class) return range_set('\b', '\b');
        fail("word-boundary assertions are not supported");
      default:
        break;
    }
    if ((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      fail(std::string("unsupported escape \\") + c);
    }
    const auto b = static_cast<unsigned char>(c);
    return range_set(b, b);
  }

  PatternNode bracket() {
    // pos_ is just past '['
    bool negate = false;
    if (!at_end() && peek() == '^') {
      negate = true;
      ++pos_;
    }
    ByteSet s;
    bool first = true;
    while (true) {
      if (at_end()) fail("unterminated '['");
      if (peek() == ']' && !first) {
        ++pos_;
        break;
      }
      first = false;
      // One member: either an escape set or a single byte, possibly a range.
      int lo = -1;
      if (peek() == '\\') {
        ++pos_;
        const ByteSet e = escape(true);
        if (e.count() != 1) {
          s |= e;
          continue;
        }
        for (int b = 0; b < 256; ++b) {
          if (e.test(static_cast<std::size_t>(b))) lo = b;
        }
      } else {
        lo = static_cast<unsigned char>(text_[pos_++]);
      }
      if (pos_ + 1 < text_.size() && peek() == '-' && text_[pos_ + 1] != ']') {
        ++pos_;
        int hi = -1;
        if (peek() == '\\') {
          ++pos_;
          const ByteSet e = escape(true);
          if (e.count() != 1) fail("class escape used as range bound");
          for (int b = 0; b < 256; ++b) {
            if (e.test(static_cast<std::size_t>(b))) hi = b;
          }
        } else {
          hi = static_cast<unsigned char>(text_[pos_++]);
        }
        if (hi < lo) fail("character range out of order");
        s |= range_set(static_cast<unsigned char>(lo), static_cast<unsigned char>(hi));
      } else {
        s.set(static_cast<std::size_t>(lo));
      }
    }
    if (negate) s = ~s;
    if (s.none()) fail("empty character class");
    return set_node(s);
  }

  PatternNode atom() {
    const char c = text_[pos_++];
    switch (c) {
      case '(': {
        if (!at_end() && peek() == '?') {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
            pos_ += 2;
          } else {
            fail("lookaround and inline flags are not supported");
          }
        }
        PatternNode inner = alternation();
        if (at_end() || peek() != ')') fail("unterminated '('");
        ++pos_;
        return inner;
      }
      case '[':
        return bracket();
      case '.': {
        ByteSet s;
        s.set();
        s.reset('\n');
        return set_node(s, true);
      }
      case '\\':
        return set_node(escape(false));
      case '^':
      case '$':
        --pos_;
        fail("anchors are not supported");
      case '*':
      case '+':
      case '?':
      case '{':
        --pos_;
        fail("quantifier without operand");
      default: {
        const auto b = static_cast<unsigned char>(c);
        return set_node(range_set(b, b));
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Head positions (reverse=false) or tail positions in reverse text order.
bool fixed_positions(const PatternNode& node, bool reverse, std::vector<ByteSet>& out) {
  switch (node.kind) {
    case PatternNode::Kind::Set:
      out.push_back(node.set);
      return true;
    case PatternNode::Kind::Concat:
      if (reverse) {
        for (auto it = node.kids.rbegin(); it != node.kids.rend(); ++it) {
          if (!fixed_positions(*it, reverse, out)) return false;
        }
      } else {
        for (const auto& kid : node.kids) {
          if (!fixed_positions(kid, reverse, out)) return false;
        }
      }
      return true;
    case PatternNode::Kind::Repeat:
      for (int i = 0; i < node.min; ++i) {
        if (!fixed_positions(node.kids.front(), reverse, out)) return false;
      }
      return node.max == node.min;
    case PatternNode::Kind::Alt:
      return false;
  }
  return false;
}

std::size_t node_min(const PatternNode& node) {
  switch (node.kind) {
    case PatternNode::Kind::Set:
      return 1;
    case PatternNode::Kind::Concat: {
      std::size_t total = 0;
      for (const auto& k : node.kids) total += node_min(k);
      return total;
    }
    case PatternNode::Kind::Alt: {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (const auto& k : node.kids) best = std::min(best, node_min(k));
      return best;
    }
    case PatternNode::Kind::Repeat:
      return static_cast<std::size_t>(node.min) * node_min(node.kids.front());
  }
  return 0;
}

std::optional<std::size_t> node_max(const PatternNode& node) {
  switch (node.kind) {
    case PatternNode::Kind::Set:
      return 1;
    case PatternNode::Kind::Concat: {
      std::size_t total = 0;
      for (const auto& k : node.kids) {
        const auto m = node_max(k);
        if (!m) return std::nullopt;
        total += *m;
      }
      return total;
    }
    case PatternNode::Kind::Alt: {
      std::size_t best = 0;
      for (const auto& k : node.kids) {
        const auto m = node_max(k);
        if (!m) return std::nullopt;
        best = std::max(best, *m);
      }
      return best;
    }
    case PatternNode::Kind::Repeat: {
      if (node.max < 0) return std::nullopt;
      const auto m = node_max(node.kids.front());
      if (!m) return std::nullopt;
      return static_cast<std::size_t>(node.max) * *m;
    }
  }
  return std::nullopt;
}

void generate_node(const PatternNode& node, std::mt19937_64& rng, const GenerateOptions& options,
                   std::string& out) {
  switch (node.kind) {
    case PatternNode::Kind::Set: {
      if (node.any) {
        out.push_back('.');
        return;
      }
      // Printable members first; fall back to any member.
      std::vector<unsigned char> members;
      for (int b = 0x20; b < 0x7f; ++b) {
        if (node.set.test(static_cast<std::size_t>(b))) members.push_back(static_cast<unsigned char>(b));
      }
      if (members.empty()) {
        throw Error(Errc::UnsupportedPattern, "character class without printable members");
      }
      out.push_back(static_cast<char>(members[uniform_below(rng, members.size())]));
      return;
    }
    case PatternNode::Kind::Concat:
      for (const auto& k : node.kids) generate_node(k, rng, options, out);
      return;
    case PatternNode::Kind::Alt:
      generate_node(node.kids[uniform_below(rng, node.kids.size())], rng, options, out);
      return;
    case PatternNode::Kind::Repeat: {
      const int hi = node.max < 0 ? node.min + options.unbounded_extra : node.max;
      if (hi < 0) throw Error(Errc::UnsupportedPattern, "unbounded repetition");
      const auto count = node.min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - node.min + 1)));
      for (int i = 0; i < count; ++i) generate_node(node.kids.front(), rng, options, out);
      return;
    }
  }
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::InvalidPattern, "empty pattern");
  Pattern p;
  p.text_ = std::string(text);
  p.root_ = Parser(text).parse();
  if (node_min(p.root_) == 0) throw Error(Errc::InvalidPattern, "pattern can match the empty string");
  p.compile();
  return p;
}

int Pattern::add_state(State s) {
  states_.push_back(s);
  return static_cast<int>(states_.size()) - 1;
}

namespace {

struct Frag {
  int start;
  std::vector<std::pair<int, int>> exits;  // (state index, slot 0=out / 1=out1)
};

}  // namespace

void Pattern::compile() {
  states_.clear();
  sets_.clear();

  auto patch = [this](const std::vector<std::pair<int, int>>& exits, int target) {
    for (const auto& [state, slot] : exits) {
      (slot == 0 ? states_[static_cast<std::size_t>(state)].out
                 : states_[static_cast<std::size_t>(state)].out1) = target;
    }
  };

  std::function<Frag(const PatternNode&)> emit = [&](const PatternNode& node) -> Frag {
    switch (node.kind) {
      case PatternNode::Kind::Set: {
        sets_.push_back(node.set);
        const int s = add_state({State::Kind::Byte, static_cast<int>(sets_.size()) - 1, -1, -1});
        return {s, {{s, 0}}};
      }
      case PatternNode::Kind::Concat: {
        Frag whole = emit(node.kids.front());
        for (std::size_t i = 1; i < node.kids.size(); ++i) {
          Frag next = emit(node.kids[i]);
          patch(whole.exits, next.start);
          whole.exits = std::move(next.exits);
        }
        return whole;
      }
      case PatternNode::Kind::Alt: {
        Frag acc = emit(node.kids.back());
        for (std::size_t i = node.kids.size() - 1; i-- > 0;) {
          Frag left = emit(node.kids[i]);
          const int split = add_state({State::Kind::Split, -1, left.start, acc.start});
          std::vector<std::pair<int, int>> exits = std::move(left.exits);
          exits.insert(exits.end(), acc.exits.begin(), acc.exits.end());
          acc = {split, std::move(exits)};
        }
        return acc;
      }
      case PatternNode::Kind::Repeat: {
        const PatternNode& kid = node.kids.front();
        std::optional<Frag> whole;
        auto append = [&](Frag f) {
          if (!whole) {
            whole = std::move(f);
          } else {
            patch(whole->exits, f.start);
            whole->exits = std::move(f.exits);
          }
        };
        for (int i = 0; i < node.min; ++i) append(emit(kid));
        if (node.max < 0) {
          // kid* loop
          Frag body = emit(kid);
          const int split = add_state({State::Kind::Split, -1, body.start, -1});
          patch(body.exits, split);
          append(Frag{split, {{split, 1}}});
        } else {
          // (kid (kid (...)?)?)? nested optional copies
          std::vector<Frag> optional_copies;
          for (int i = node.min; i < node.max; ++i) optional_copies.push_back(emit(kid));
          if (!optional_copies.empty()) {
            std::vector<std::pair<int, int>> skip_exits;
            std::vector<int> splits;
            for (auto& f : optional_copies) {
              splits.push_back(add_state({State::Kind::Split, -1, f.start, -1}));
            }
            for (std::size_t i = 0; i < optional_copies.size(); ++i) {
              skip_exits.push_back({splits[i], 1});
              if (i + 1 < optional_copies.size()) {
                patch(optional_copies[i].exits, splits[i + 1]);
              } else {
                skip_exits.insert(skip_exits.end(), optional_copies[i].exits.begin(),
                                  optional_copies[i].exits.end());
              }
            }
            append(Frag{splits.front(), std::move(skip_exits)});
          }
        }
        if (!whole) {
          // {0,0}: matches nothing extra; an epsilon split with both exits pending.
          const int s = add_state({State::Kind::Split, -1, -1, -1});
          return {s, {{s, 0}, {s, 1}}};
        }
        return std::move(*whole);
      }
    }
    throw Error(Errc::InvalidPattern, "unreachable node kind");
  };

  Frag root = emit(root_);
  const int match = add_state({State::Kind::Match, -1, -1, -1});
  patch(root.exits, match);
  start_ = root.start;

  std::vector<int> list;
  std::vector<std::uint32_t> mark(states_.size(), 0);
  add_closure(list, mark, 1, start_);
  first_.reset();
  for (int s : list) {
    const auto& st = states_[static_cast<std::size_t>(s)];
    if (st.kind == State::Kind::Byte) first_ |= sets_[static_cast<std::size_t>(st.set)];
  }
}

void Pattern::add_closure(std::vector<int>& list, std::vector<std::uint32_t>& mark,
                          std::uint32_t gen, int state) const {
  std::vector<int> stack{state};
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    if (s < 0 || mark[static_cast<std::size_t>(s)] == gen) continue;
    mark[static_cast<std::size_t>(s)] = gen;
    const auto& st = states_[static_cast<std::size_t>(s)];
    if (st.kind == State::Kind::Split) {
      stack.push_back(st.out1);
      stack.push_back(st.out);
    } else {
      list.push_back(s);
    }
  }
}

std::optional<std::size_t> Pattern::longest_at(
    std::string_view text, std::size_t start,
    const std::function<bool(std::size_t)>& accept_end) const {
  if (start >= text.size() || !first_.test(static_cast<unsigned char>(text[start]))) {
    return std::nullopt;
  }
  thread_local std::vector<std::uint32_t> mark;
  thread_local std::uint32_t gen = 0;
  thread_local std::vector<int> current;
  thread_local std::vector<int> next;
  if (mark.size() < states_.size() || gen > 0xFFFF0000u) {
    mark.assign(std::max(mark.size(), states_.size()), 0);
    gen = 0;
  }
  current.clear();
  add_closure(current, mark, ++gen, start_);

  std::optional<std::size_t> best;
  std::size_t pos = start;
  while (true) {
    bool has_match = false;
    for (int s : current) {
      if (states_[static_cast<std::size_t>(s)].kind == State::Kind::Match) has_match = true;
    }
    if (has_match && pos > start && accept_end(pos)) best = pos;
    if (pos >= text.size() || current.empty()) break;
    const auto byte = static_cast<unsigned char>(text[pos]);
    next.clear();
    ++gen;
    for (int s : current) {
      const auto& st = states_[static_cast<std::size_t>(s)];
      if (st.kind == State::Kind::Byte && sets_[static_cast<std::size_t>(st.set)].test(byte)) {
        add_closure(next, mark, gen, st.out);
      }
    }
    current.swap(next);
    ++pos;
  }
  return best;
}

bool Pattern::full_match(std::string_view s) const {
  const auto end = longest_at(s, 0, [&](std::size_t e) { return e == s.size(); });
  return end.has_value();
}

std::vector<ByteSet> Pattern::fixed_edge(bool from_end) const {
  std::vector<ByteSet> out;
  fixed_positions(root_, from_end, out);
  if (from_end) std::reverse(out.begin(), out.end());
  return out;
}

std::size_t Pattern::min_length() const { return node_min(root_); }
std::optional<std::size_t> Pattern::max_length() const { return node_max(root_); }

std::string generate_from(const Pattern& pattern, std::mt19937_64& rng,
                          const GenerateOptions& options) {
  std::string out;
  generate_node(pattern.root(), rng, options, out);
  return out;
}

}  // namespace credmem
