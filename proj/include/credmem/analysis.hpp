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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credmem/corpus.hpp"
#include "credmem/filters.hpp"
#include "credmem/gateway.hpp"
#include "credmem/prompt.hpp"
#include "credmem/rational.hpp"

namespace credmem {

struct IndexLocation {
  std::string doc_id;
  Span span;
  friend bool operator==(const IndexLocation&, const IndexLocation&) = default;
};

struct CorpusIndex {
  std::map<std::string, std::vector<IndexLocation>> entries;
  std::string built_from;  // corpus digest

  std::size_t size() const noexcept { return entries.size(); }
  bool contains(std::string_view secret) const { return entries.find(std::string(secret)) != entries.end(); }
};

CorpusIndex build_index(const std::vector<CorpusDocument>& docs, const Registry& registry,
                        const ScanOptions& options = {});

enum class MemorizationLabel : int { NotMemorized = 1, WeaklyMemorized = 2, StronglyMemorized = 3 };

std::string_view label_name(MemorizationLabel l);

// Throws Error{NotPlausible}.
MemorizationLabel classify(const CandidateSecret& candidate, const PromptCase& c, const CorpusIndex& index);

struct MetricsScope {
  std::string backend_id;
  std::string secret_type = "ALL";
  friend bool operator==(const MetricsScope&, const MetricsScope&) = default;
};

struct MetricsReport {
  MetricsScope scope;
  std::int64_t ts = 0;   // non-empty suggestions
  std::int64_t ps = 0;   // suggestions with a plausible candidate
  std::int64_t ms = 0;
  std::int64_t sms = 0;
  std::int64_t wms = 0;
  Rational pr, smr, wmr, mr;
  bool degenerate = false;  // a zero denominator was involved
  int display_decimals = 2;

  // Throws Error{InconsistentInputs} unless sms <= ms <= ps <= ts.
  static MetricsReport from_counts(MetricsScope scope, std::int64_t ts, std::int64_t ps, std::int64_t ms,
                                   std::int64_t sms);

  std::string display(const Rational& r) const { return r.fixed(display_decimals); }
  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

// Counts per suggestion: a suggestion is plausible when any of its
// candidates is, and takes the highest label among those. `labels` maps
// candidate_id to label and must cover every plausible candidate.
// Throws Error{InconsistentInputs}.
MetricsReport compute_metrics(const std::vector<CandidateSecret>& candidates,
                              const std::map<std::string, MemorizationLabel>& labels,
                              const std::vector<Suggestion>& suggestions, const MetricsScope& scope);

// One report per (backend, type) present in the suggestions, plus an ALL row per backend.
std::vector<MetricsReport> compute_metrics_table(const std::vector<CandidateSecret>& candidates,
                                                 const std::map<std::string, MemorizationLabel>& labels,
                                                 const std::vector<Suggestion>& suggestions,
                                                 const std::map<std::string, std::string>& case_types);

std::string metrics_csv(const std::vector<MetricsReport>& rows);

enum class Alternative { Less, Greater, TwoSided };
std::string_view alternative_name(Alternative a);

struct StatTestResult {
  std::string variable;
  int group_a = 0;
  int group_b = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  double u = 0.0;  // U statistic of group a
  double p_value = 1.0;
  Alternative alternative = Alternative::Less;
  std::string method;  // exact | normal_tie_corrected

  std::string pair_name() const { return "mwu_" + std::to_string(group_a) + std::to_string(group_b); }
};

inline constexpr std::size_t kExactLimit = 20;

// Midranks for ties. Exact null distribution when n_a + n_b <= 20, otherwise
// normal approximation with tie-corrected variance and continuity correction.
// Throws Error{EmptyGroup}.
StatTestResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b, Alternative alternative);

inline constexpr std::string_view kFeatureNames[] = {"line_num",        "token_num",       "line_num_above",
                                                     "token_num_above", "line_num_below", "token_num_below"};

double feature_value(const ContextFeatures& f, std::string_view name);

struct SkippedTest {
  std::string variable;
  int group_a = 0;
  int group_b = 0;
  std::string reason;
};

struct FeatureTestReport {
  std::vector<StatTestResult> results;
  std::vector<SkippedTest> skipped;
};

// Per-case label: the highest label among the case's plausible candidates, 1 when none.
std::map<std::string, int> case_labels(const std::vector<PromptCase>& cases,
                                       const std::vector<CandidateSecret>& candidates,
                                       const std::map<std::string, MemorizationLabel>& labels);

// For each feature and each pair (1,2), (1,3), (2,3): is group X smaller than group Y?
FeatureTestReport feature_tests(const std::vector<PromptCase>& cases, const std::map<std::string, int>& labels);

std::string stats_csv(const FeatureTestReport& report);

}  // namespace credmem
