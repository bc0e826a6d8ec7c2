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

#include "credmem/registry.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "credmem/error.hpp"
#include "credmem/util.hpp"

namespace credmem {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool parse_bool(std::string_view v, std::string_view where) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw Error(Errc::ParseError, std::string(where) + ": expected boolean, got '" + std::string(v) + "'");
}

RiskFlags parse_risks(std::string_view v, std::string_view where) {
  RiskFlags flags;
  std::string token;
  auto flush = [&] {
    const auto t = trim(token);
    if (t.empty()) return;
    if (t == "D" || t == "DataBreach") {
      flags.add(Risk::DataBreach);
    } else if (t == "M" || t == "MessageAbuse") {
      flags.add(Risk::MessageAbuse);
    } else if (t == "F" || t == "FinancialLoss") {
      flags.add(Risk::FinancialLoss);
    } else {
      throw Error(Errc::ParseError, std::string(where) + ": unknown risk '" + std::string(t) + "'");
    }
    token.clear();
  };
  for (char c : v) {
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return flags;
}

FixedPart parse_fixed(std::string_view token, std::string_view where) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos || colon + 1 == token.size()) {
    throw Error(Errc::ParseError, std::string(where) + ": malformed fixed part '" + std::string(token) + "'");
  }
  const auto kind = token.substr(0, colon);
  FixedPart part;
  part.text = std::string(token.substr(colon + 1));
  if (kind == "prefix") {
    part.anchor = FixedPart::Anchor::Prefix;
  } else if (kind == "suffix") {
    part.anchor = FixedPart::Anchor::Suffix;
  } else if (kind.starts_with("infix@")) {
    part.anchor = FixedPart::Anchor::Infix;
    const auto num = kind.substr(6);
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), part.offset);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw Error(Errc::ParseError, std::string(where) + ": bad infix offset '" + std::string(num) + "'");
    }
  } else {
    throw Error(Errc::ParseError, std::string(where) + ": unknown fixed-part anchor '" + std::string(kind) + "'");
  }
  return part;
}

std::string format_fixed(const FixedPart& p) {
  switch (p.anchor) {
    case FixedPart::Anchor::Prefix: return "prefix:" + p.text;
    case FixedPart::Anchor::Suffix: return "suffix:" + p.text;
    case FixedPart::Anchor::Infix: return "infix@" + std::to_string(p.offset) + ":" + p.text;
  }
  return {};
}

void validate_spec(const SecretTypeSpec& spec, std::string_view where) {
  if (spec.id.empty()) throw Error(Errc::ParseError, std::string(where) + ": record without id");
  if (spec.core_pattern.empty()) {
    throw Error(Errc::ParseError, std::string(where) + ": " + spec.id + " has no pattern");
  }
}

}  // namespace

std::optional<std::string> SecretTypeSpec::fixed_prefix() const {
  for (const auto& p : fixed_parts) {
    if (p.anchor == FixedPart::Anchor::Prefix) return p.text;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matcher

Matcher::Matcher(std::string type_id, Pattern core, ByteSet boundary)
    : type_id_(std::move(type_id)), core_(std::move(core)), boundary_(boundary) {}

std::vector<Span> Matcher::find_all(std::string_view text) const {
  std::vector<Span> hits;
  const auto accept_end = [&](std::size_t e) { return e == text.size() || is_boundary(text[e]); };
  const ByteSet& first = core_.first_bytes();
  std::size_t i = 0;
  while (i < text.size()) {
    if ((i == 0 || is_boundary(text[i - 1])) && first.test(static_cast<unsigned char>(text[i]))) {
      if (const auto end = core_.longest_at(text, i, accept_end)) {
        hits.push_back({i, *end});
        i = *end;
        continue;
      }
    }
    ++i;
  }
  return hits;
}

Matcher compile_matcher(const SecretTypeSpec& spec, const Registry& registry) {
  return Matcher(spec.id, Pattern::parse(spec.core_pattern), registry.boundary());
}

void check_fixed_parts(const SecretTypeSpec& spec, const Pattern& pattern) {
  const auto head = pattern.fixed_edge(false);
  const auto tail = pattern.fixed_edge(true);
  auto forced = [](const std::vector<ByteSet>& sets, std::size_t at, std::string_view lit) {
    if (at + lit.size() > sets.size()) return false;
    for (std::size_t i = 0; i < lit.size(); ++i) {
      const ByteSet& s = sets[at + i];
      if (s.count() != 1 || !s.test(static_cast<unsigned char>(lit[i]))) return false;
    }
    return true;
  };
  for (const auto& part : spec.fixed_parts) {
    bool ok = false;
    switch (part.anchor) {
      case FixedPart::Anchor::Prefix:
        ok = forced(head, 0, part.text);
        break;
      case FixedPart::Anchor::Infix:
        ok = forced(head, part.offset, part.text);
        break;
      case FixedPart::Anchor::Suffix:
        ok = part.text.size() <= tail.size() &&
             forced(tail, tail.size() - part.text.size(), part.text);
        break;
    }
    if (!ok) {
      throw Error(Errc::InvalidPattern,
                  spec.id + ": fixed part '" + format_fixed(part) + "' is not forced by " + spec.core_pattern);
    }
  }
}

// ---------------------------------------------------------------------------
// Registry

Registry::Registry() { set_boundary(kDefaultBoundaryPattern); }

void Registry::set_boundary(std::string_view pattern) {
  const Pattern p = Pattern::parse(pattern);
  if (p.root().kind != PatternNode::Kind::Set) {
    throw Error(Errc::InvalidPattern, "boundary must be a single character class: " + std::string(pattern));
  }
  boundary_pattern_ = std::string(pattern);
  boundary_ = p.root().set;
  matchers_.clear();
  for (const auto& [id, spec] : specs_) matchers_.emplace(id, compile_matcher(spec, *this));
}

void Registry::add(SecretTypeSpec spec) {
  validate_spec(spec, "registry");
  if (specs_.contains(spec.id)) throw Error(Errc::DuplicateId, spec.id);
  Matcher m = compile_matcher(spec, *this);
  check_fixed_parts(spec, m.core());
  const std::string id = spec.id;
  matchers_.emplace(id, std::move(m));
  specs_.emplace(id, std::move(spec));
}

bool Registry::contains(std::string_view id) const { return specs_.find(std::string(id)) != specs_.end(); }

const SecretTypeSpec& Registry::spec(std::string_view id) const {
  const auto it = specs_.find(std::string(id));
  if (it == specs_.end()) throw Error(Errc::ConfigError, "unknown secret type '" + std::string(id) + "'");
  return it->second;
}

const Matcher& Registry::matcher(std::string_view id) const {
  const auto it = matchers_.find(id);
  if (it == matchers_.end()) throw Error(Errc::ConfigError, "unknown secret type '" + std::string(id) + "'");
  return it->second;
}

Registry Registry::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

Registry Registry::parse(std::string_view text, std::string_view source) {
  Registry reg;
  std::optional<SecretTypeSpec> current;
  std::size_t record_line = 0;

  auto where = [&](std::size_t line) { return std::string(source) + ":" + std::to_string(line); };
  auto finish = [&] {
    if (current) {
      validate_spec(*current, where(record_line));
      reg.add(std::move(*current));
      current.reset();
    }
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[spec]") {
      finish();
      current.emplace();
      record_line = lineno;
      continue;
    }
    if (line.front() == '[') throw Error(Errc::ParseError, where(lineno) + ": unknown section " + std::string(line));

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::ParseError, where(lineno) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    if (!current) {
      if (key == "boundary") {
        reg.set_boundary(value);
        continue;
      }
      throw Error(Errc::ParseError, where(lineno) + ": key '" + std::string(key) + "' outside a [spec] record");
    }

    SecretTypeSpec& s = *current;
    if (key == "id") {
      s.id = std::string(value);
    } else if (key == "provider") {
      s.provider = std::string(value);
    } else if (key == "domain") {
      s.domain = std::string(value);
    } else if (key == "pattern") {
      s.core_pattern = std::string(value);
    } else if (key == "fixed") {
      for (const auto& tok : split_ws(value)) s.fixed_parts.push_back(parse_fixed(tok, where(lineno)));
    } else if (key == "exempt_word_filter") {
      s.word_filter_exempt = parse_bool(value, where(lineno));
    } else if (key == "risks") {
      s.risks = parse_risks(value, where(lineno));
    } else if (key == "validatable") {
      s.validation_supported = parse_bool(value, where(lineno));
    } else if (key.starts_with("probe.")) {
      if (!s.probe) s.probe.emplace();
      ProbeRecord& p = *s.probe;
      const auto sub = key.substr(6);
      if (sub == "method") {
        p.method = std::string(value);
      } else if (sub == "endpoint") {
        p.endpoint = std::string(value);
      } else if (sub == "header") {
        p.headers.emplace_back(value);
      } else if (sub == "body") {
        p.body = std::string(value);
      } else if (sub == "success") {
        p.success_statuses.clear();
        std::string v(value);
        std::replace(v.begin(), v.end(), ',', ' ');
        for (const auto& tok : split_ws(v)) {
          int code = 0;
          const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), code);
          if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw Error(Errc::ParseError, where(lineno) + ": bad status '" + tok + "'");
          }
          p.success_statuses.push_back(code);
        }
      } else {
        throw Error(Errc::ParseError, where(lineno) + ": unknown probe key '" + std::string(sub) + "'");
      }
    } else {
      throw Error(Errc::ParseError, where(lineno) + ": unknown key '" + std::string(key) + "'");
    }
  }
  finish();
  return reg;
}

std::string Registry::serialize() const {
  std::ostringstream out;
  out << "boundary = " << boundary_pattern_ << "\n";
  for (const auto& [id, s] : specs_) {
    out << "\n[spec]\n";
    out << "id = " << s.id << "\n";
    out << "provider = " << s.provider << "\n";
    out << "domain = " << s.domain << "\n";
    out << "pattern = " << s.core_pattern << "\n";
    if (!s.fixed_parts.empty()) {
      out << "fixed =";
      for (const auto& p : s.fixed_parts) out << " " << format_fixed(p);
      out << "\n";
    }
    out << "exempt_word_filter = " << (s.word_filter_exempt ? "true" : "false") << "\n";
    out << "risks = " << risk_letters(s.risks) << "\n";
    out << "validatable = " << (s.validation_supported ? "true" : "false") << "\n";
    if (s.probe) {
      out << "probe.method = " << s.probe->method << "\n";
      out << "probe.endpoint = " << s.probe->endpoint << "\n";
      for (const auto& h : s.probe->headers) out << "probe.header = " << h << "\n";
      if (!s.probe->body.empty()) out << "probe.body = " << s.probe->body << "\n";
      out << "probe.success =";
      for (std::size_t i = 0; i < s.probe->success_statuses.size(); ++i) {
        out << (i == 0 ? " " : ",") << s.probe->success_statuses[i];
      }
      out << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::string generate_example_secret(const SecretTypeSpec& spec, std::uint64_t seed,
                                    const GenerateOptions& options) {
  const Pattern pattern = Pattern::parse(spec.core_pattern);
  std::mt19937_64 rng(mix_seed(fnv1a64(spec.id), seed));
  return generate_from(pattern, rng, options);
}

std::string strip_fixed_parts_unchecked(const SecretTypeSpec& spec, std::string_view s) {
  std::vector<bool> drop(s.size(), false);
  for (const auto& p : spec.fixed_parts) {
    std::size_t at = 0;
    switch (p.anchor) {
      case FixedPart::Anchor::Prefix:
        at = 0;
        break;
      case FixedPart::Anchor::Infix:
        at = p.offset;
        break;
      case FixedPart::Anchor::Suffix:
        if (p.text.size() > s.size()) continue;
        at = s.size() - p.text.size();
        break;
    }
    if (at + p.text.size() > s.size() || s.substr(at, p.text.size()) != p.text) continue;
    for (std::size_t i = 0; i < p.text.size(); ++i) drop[at + i] = true;
  }
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!drop[i]) out.push_back(s[i]);
  }
  return out;
}

std::string strip_fixed_parts(const SecretTypeSpec& spec, std::string_view s) {
  if (!Pattern::parse(spec.core_pattern).full_match(s)) {
    throw Error(Errc::NotAMatch, "'" + std::string(s) + "' does not match " + spec.id);
  }
  return strip_fixed_parts_unchecked(spec, s);
}

std::string risk_letters(RiskFlags flags) {
  std::string out;
  auto add = [&](Risk r, char c) {
    if (!flags.has(r)) return;
    if (!out.empty()) out.push_back(',');
    out.push_back(c);
  };
  add(Risk::DataBreach, 'D');
  add(Risk::MessageAbuse, 'M');
  add(Risk::FinancialLoss, 'F');
  return out;
}

std::string mask_secret(const SecretTypeSpec& spec, std::string_view secret) {
  std::size_t keep = 0;
  if (const auto prefix = spec.fixed_prefix(); prefix && secret.starts_with(*prefix)) keep = prefix->size();
  keep = std::min(secret.size(), keep + 6);
  std::string out(secret.substr(0, keep));
  out.append(secret.size() - keep, '*');
  return out;
}

}  // namespace credmem
