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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "credmem/gateway.hpp"
#include "credmem/registry.hpp"
#include "credmem/util.hpp"

namespace credmem {

enum class FilterStage { Regex, Entropy, Pattern, Word };
inline constexpr FilterStage kFilterStages[] = {FilterStage::Regex, FilterStage::Entropy, FilterStage::Pattern,
                                                FilterStage::Word};

std::string_view filter_stage_name(FilterStage s);
FilterStage filter_stage_from(std::string_view name);  // throws Error{ParseError}

struct FilterVerdict {
  FilterStage stage = FilterStage::Regex;
  bool passed = false;
  std::string reason;  // never empty on failure
  friend bool operator==(const FilterVerdict&, const FilterVerdict&) = default;
};

struct CandidateSecret {
  std::string candidate_id;
  std::string case_id;
  std::string backend_id;
  std::string secret_type_id;
  int rank = 1;
  std::string raw_text;  // empty when the suggestion had no match
  std::string stripped_text;
  double entropy_per_char = 0.0;
  std::vector<FilterVerdict> verdicts;
  bool plausible = false;

  friend bool operator==(const CandidateSecret&, const CandidateSecret&) = default;
};

json to_json(const CandidateSecret& c);
CandidateSecret candidate_from_json(const json& j);

// Boundary-respecting matches of the type in the suggestion, first-seen order, no repeats.
std::vector<std::string> extract_candidates(const Suggestion& sugg, const SecretTypeSpec& spec,
                                            const Registry& registry);

// Bits per character. Throws Error{EmptyString}.
double shannon_entropy_per_char(std::string_view s);

struct EntropyStats {
  std::size_t n = 0;
  double mean = 0.0;
  double sigma = 0.0;  // population (1/N) standard deviation

  bool inert() const noexcept { return n < 2 || sigma == 0.0; }
  double lower() const noexcept { return mean - 3.0 * sigma; }
  double upper() const noexcept { return mean + 3.0 * sigma; }
};

EntropyStats entropy_stats(const std::vector<double>& values);

FilterVerdict entropy_verdict(double h, const EntropyStats& stats);

// Verdicts for a whole population, in input order.
std::vector<FilterVerdict> entropy_filter(const std::vector<double>& population);

// Evaluated on the stripped text.
FilterVerdict pattern_filter(std::string_view stripped);

std::string_view pattern_rule_name(int rule);

class Dictionary {
 public:
  static constexpr std::size_t kMinWordLength = 4;

  Dictionary() = default;
  explicit Dictionary(const std::vector<std::string>& words);

  // One word per line, '#' comments allowed. Throws Error{DictionaryMissing}.
  static Dictionary load(const std::filesystem::path& path);

  std::size_t size() const noexcept { return words_.size(); }
  bool contains(std::string_view lower_word) const { return words_.contains(std::string(lower_word)); }

  // Longest dictionary word inside `s` (case-insensitive), earliest on ties.
  // Returns the span in `s`.
  std::optional<Span> find_longest(std::string_view s) const;

 private:
  std::unordered_set<std::string> words_;
  std::size_t max_len_ = 0;
};

FilterVerdict word_filter(std::string_view stripped, const Dictionary& dictionary, const SecretTypeSpec& spec);

struct FunnelRow {
  FilterStage stage = FilterStage::Regex;
  std::size_t in_count = 0;
  std::size_t dropped = 0;
  std::size_t out_count = 0;
  friend bool operator==(const FunnelRow&, const FunnelRow&) = default;
};

struct CascadeResult {
  std::vector<CandidateSecret> candidates;
  std::vector<FunnelRow> funnel;  // one row per stage, in order
};

// Empty suggestions are skipped. A non-empty suggestion with no match yields
// one candidate that fails the regex stage; otherwise one candidate per
// distinct match. `case_types` maps case_id to secret type id.
CascadeResult run_cascade(const std::vector<Suggestion>& suggestions,
                          const std::map<std::string, std::string>& case_types, const Registry& registry,
                          const Dictionary& dictionary);

std::string funnel_csv(const std::vector<FunnelRow>& funnel);

}  // namespace credmem
