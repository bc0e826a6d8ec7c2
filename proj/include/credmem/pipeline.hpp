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

// Staged pipeline over a run directory. Each stage reads its upstream
// artifacts and atomically writes its own.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credmem/gateway.hpp"
#include "credmem/util.hpp"

namespace credmem {

enum class Stage { Scan, Prompts, Query, Filter, Classify, Stats, Report, Probe, E2E };

std::string_view stage_name(Stage s);
Stage stage_from(std::string_view name);  // throws Error{ConfigError}

struct PipelineConfig {
  std::filesystem::path registry_path;
  std::filesystem::path corpus_path;
  std::filesystem::path backends_path;  // empty: the built-in mock backend only
  std::filesystem::path dictionary_path;
  std::filesystem::path out_dir;
  std::vector<std::string> backend_ids;  // empty: every configured backend
  std::optional<int> top_k;
  std::optional<double> min_gap_seconds;  // overrides the backends' own gaps when set
  std::uint64_t seed = 0;
  std::size_t per_type = 50;
  double sig_level = 0.10;
  bool redact_ground_truth = false;
  bool ack_live_probe = false;
  std::string probe_mode = "dry_run";
  std::string stub_origin;
  unsigned threads = 0;  // scan workers; 0 = hardware concurrency
};

// The mock backend used when no backends file is given.
BackendConfig default_mock_backend();

// Backends selected by the config, with CLI overrides applied. Throws Error{ConfigError}.
std::vector<BackendConfig> resolve_backends(const PipelineConfig& config);

// Artifact names inside the run directory.
namespace artifacts {
inline constexpr std::string_view kManifest = "manifest.json";
inline constexpr std::string_view kOccurrences = "occurrences.jsonl";
inline constexpr std::string_view kCases = "cases.jsonl";
inline constexpr std::string_view kShareableCases = "cases.shareable.jsonl";
inline constexpr std::string_view kRecords = "records.jsonl";
inline constexpr std::string_view kSuggestions = "suggestions.jsonl";
inline constexpr std::string_view kCandidates = "candidates.jsonl";
inline constexpr std::string_view kFunnel = "funnel.csv";
inline constexpr std::string_view kLabels = "labels.jsonl";
inline constexpr std::string_view kMetrics = "metrics.csv";
inline constexpr std::string_view kStats = "stats.csv";
inline constexpr std::string_view kReport = "report.md";
inline constexpr std::string_view kProbes = "probes.jsonl";
}  // namespace artifacts

// Throws Error (MissingUpstream, ConfigError, or the failing module's code).
void run_stage(Stage stage, const PipelineConfig& config);

// CSV reader for the files this pipeline writes: skips "# " comment lines,
// returns rows as header-keyed maps. Throws Error{ParseError | Io}.
std::vector<std::map<std::string, std::string>> read_csv(const std::filesystem::path& path);

// Renders the report from metrics, funnel and stats CSV text.
std::string render_report(const std::string& run_id, const std::vector<std::map<std::string, std::string>>& metrics,
                          const std::vector<std::map<std::string, std::string>>& funnel,
                          const std::vector<std::map<std::string, std::string>>& stats, double sig_level);

}  // namespace credmem
