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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credmem/pattern.hpp"

namespace credmem {

// The identifier-like bytes that must not touch a secret on either side.
inline constexpr std::string_view kDefaultBoundaryPattern = R"([^a-zA-Z0-9_\-\/\\\+])";

enum class Risk : std::uint8_t {
  DataBreach = 1,
  MessageAbuse = 2,
  FinancialLoss = 4,
};

struct RiskFlags {
  std::uint8_t bits = 0;

  bool has(Risk r) const noexcept { return (bits & static_cast<std::uint8_t>(r)) != 0; }
  void add(Risk r) noexcept { bits |= static_cast<std::uint8_t>(r); }
  bool empty() const noexcept { return bits == 0; }
  friend bool operator==(RiskFlags, RiskFlags) = default;
};

// A literal that every match carries at a fixed place.
struct FixedPart {
  enum class Anchor { Prefix, Suffix, Infix };
  Anchor anchor = Anchor::Prefix;
  std::size_t offset = 0;  // Infix only: byte offset from the start of the match
  std::string text;
  friend bool operator==(const FixedPart&, const FixedPart&) = default;
};

// Validation endpoint description. Lives with the spec in the registry file.
struct ProbeRecord {
  std::string method = "GET";
  std::string endpoint;
  std::vector<std::string> headers;  // "Name: value", may use {{secret}} / {{secret_basic}}
  std::string body;
  std::vector<int> success_statuses{200};
  friend bool operator==(const ProbeRecord&, const ProbeRecord&) = default;
};

struct SecretTypeSpec {
  std::string id;
  std::string provider;
  std::string domain;
  std::string core_pattern;
  std::vector<FixedPart> fixed_parts;
  bool word_filter_exempt = false;
  RiskFlags risks;
  bool validation_supported = false;
  std::optional<ProbeRecord> probe;

  // The literal a match must begin with, if declared.
  std::optional<std::string> fixed_prefix() const;

  friend bool operator==(const SecretTypeSpec&, const SecretTypeSpec&) = default;
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

// Boundary-anchored matcher: a hit needs a boundary byte (or the text edge)
// on both sides; the reported span covers only the core pattern.
class Matcher {
 public:
  Matcher(std::string type_id, Pattern core, ByteSet boundary);

  const std::string& type_id() const noexcept { return type_id_; }
  const Pattern& core() const noexcept { return core_; }

  bool is_boundary(char c) const noexcept { return boundary_.test(static_cast<unsigned char>(c)); }

  // Non-overlapping hits, left to right; each hit is the longest at its start.
  std::vector<Span> find_all(std::string_view text) const;

  // Whether `s` as a whole is a core match.
  bool full_match(std::string_view s) const { return core_.full_match(s); }

 private:
  std::string type_id_;
  Pattern core_;
  ByteSet boundary_;
};

class Registry {
 public:
  Registry();

  // Throws Error{ParseError | InvalidPattern | DuplicateId | Io}.
  static Registry load(const std::filesystem::path& path);
  static Registry parse(std::string_view text, std::string_view source = "<memory>");

  std::string serialize() const;

  void add(SecretTypeSpec spec);

  const std::map<std::string, SecretTypeSpec>& specs() const noexcept { return specs_; }
  std::size_t size() const noexcept { return specs_.size(); }
  bool contains(std::string_view id) const;
  const SecretTypeSpec& spec(std::string_view id) const;
  const Matcher& matcher(std::string_view id) const;

  const std::string& boundary_pattern() const noexcept { return boundary_pattern_; }
  const ByteSet& boundary() const noexcept { return boundary_; }

  friend bool operator==(const Registry& a, const Registry& b) {
    return a.boundary_pattern_ == b.boundary_pattern_ && a.specs_ == b.specs_;
  }

 private:
  void set_boundary(std::string_view pattern);

  std::string boundary_pattern_;
  ByteSet boundary_;
  std::map<std::string, SecretTypeSpec> specs_;
  std::map<std::string, Matcher, std::less<>> matchers_;
};

// Throws Error{InvalidPattern}.
Matcher compile_matcher(const SecretTypeSpec& spec, const Registry& registry);

// Throws Error{InvalidPattern} when a fixed part is not forced by the pattern.
void check_fixed_parts(const SecretTypeSpec& spec, const Pattern& pattern);

// Deterministic in (spec.id, seed). Throws Error{UnsupportedPattern}.
std::string generate_example_secret(const SecretTypeSpec& spec, std::uint64_t seed,
                                    const GenerateOptions& options = {});

// Removes each fixed part found at its declared place. Throws Error{NotAMatch}.
std::string strip_fixed_parts(const SecretTypeSpec& spec, std::string_view s);

// Same, for callers that already know `s` is a core match.
std::string strip_fixed_parts_unchecked(const SecretTypeSpec& spec, std::string_view s);

std::string risk_letters(RiskFlags flags);

// Prefix plus the first six characters of the rest, then asterisks.
std::string mask_secret(const SecretTypeSpec& spec, std::string_view secret);

}  // namespace credmem
