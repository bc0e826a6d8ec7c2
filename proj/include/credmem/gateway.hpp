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

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "credmem/corpus.hpp"
#include "credmem/http.hpp"
#include "credmem/prompt.hpp"
#include "credmem/registry.hpp"
#include "credmem/util.hpp"

namespace credmem {

enum class BackendKind { InfillHttp, ChatHttp, MockMemorizer, Replay };

std::string_view backend_kind_name(BackendKind kind);
BackendKind backend_kind_from(std::string_view name);  // throws Error{ConfigError}

enum class DistractorPolicy { Empty, Perturbed, Lorem };

std::string_view distractor_policy_name(DistractorPolicy p);
DistractorPolicy distractor_policy_from(std::string_view name);  // throws Error{ConfigError}

struct BackendConfig {
  std::string backend_id;
  BackendKind kind = BackendKind::MockMemorizer;
  std::string endpoint;
  std::string auth_ref;  // environment variable holding the credential
  std::string auth_header = "Authorization";
  std::string auth_scheme = "Bearer";
  int top_k = 1;
  bool multi_suggestion = false;
  std::int64_t min_query_gap_ms = 30'000;
  std::string request_template;
  std::string response_path;  // dotted path, '*' expands arrays
  int max_attempts = 3;
  std::int64_t backoff_base_ms = 1'000;
  std::int64_t timeout_ms = 60'000;
  // mock_memorizer
  std::size_t recall_threshold = 3;
  DistractorPolicy distractor = DistractorPolicy::Perturbed;
  // replay: whose records to serve (defaults to backend_id)
  std::string replay_of;

  // Throws Error{ConfigError}.
  void validate() const;
  friend bool operator==(const BackendConfig&, const BackendConfig&) = default;
};

// Accepts {"backends": [...]} or a bare array. Credential-looking keys are
// rejected: secrets live in environment slots only. Throws Error{ConfigError | Io}.
std::vector<BackendConfig> parse_backends(const json& doc);
std::vector<BackendConfig> load_backends(const std::filesystem::path& path);
json to_json(const BackendConfig& b);

struct Suggestion {
  std::string case_id;
  std::string backend_id;
  int rank = 1;
  std::string text;  // may be empty
  std::int64_t latency_ms = 0;
  std::int64_t retrieved_at_ms = 0;

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

json to_json(const Suggestion& s);
Suggestion suggestion_from_json(const json& j);

struct QueryRecord {
  std::string backend_id;
  std::string case_id;
  std::string request_digest;
  std::string status = "ok";  // ok | malformed
  std::vector<Suggestion> suggestions;
  std::int64_t requested_at_ms = 0;
  std::int64_t responded_at_ms = 0;
  int attempts = 1;
  std::string run_id;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

json to_json(const QueryRecord& r);
QueryRecord query_record_from_json(const json& j);

// Append-only JSONL log of every completed query. Each record is written
// with a single write(2) on an O_APPEND descriptor before it is handed back.
class RecordStore {
 public:
  RecordStore() = default;  // in memory only
  explicit RecordStore(const std::filesystem::path& path);
  ~RecordStore();
  RecordStore(const RecordStore&) = delete;
  RecordStore& operator=(const RecordStore&) = delete;

  void append(const QueryRecord& record);

  // Latest record for the pair, if any.
  std::optional<QueryRecord> find(std::string_view backend_id, std::string_view case_id) const;
  std::vector<QueryRecord> records() const;

 private:
  mutable std::mutex mu_;
  int fd_ = -1;
  std::vector<QueryRecord> records_;
  std::map<std::pair<std::string, std::string>, std::size_t> latest_;
};

// Throws Error{MissingRecord}.
std::vector<Suggestion> replay(const RecordStore& store, std::string_view backend_id, std::string_view case_id);

struct PlantedSecret {
  std::string type_id;
  std::size_t count = 0;
};

struct MockMemorizerState {
  std::map<std::string, PlantedSecret> planted;
  std::size_t recall_threshold = 3;
  std::uint64_t seed = 0;
  DistractorPolicy distractor = DistractorPolicy::Perturbed;
  const Registry* registry = nullptr;  // needed by the perturbed policy
};

// Duplication counts per secret text, one per occurrence.
std::map<std::string, PlantedSecret> count_planted(const std::vector<SecretOccurrence>& occs);

std::vector<Suggestion> mock_respond(const MockMemorizerState& state, const PromptCase& c,
                                     std::string_view backend_id = "mock");

using RenderedPrompt = std::variant<std::pair<std::string, std::string>, ChatPrompt>;

struct GatewayOptions {
  // Serve an existing record with the same request digest instead of re-querying.
  bool reuse_records = true;
  // Stamped on every record written.
  std::string run_id;
};

class Gateway {
 public:
  // `transport` is required for http kinds, `mock` for mock_memorizer.
  Gateway(BackendConfig config, RecordStore& store, Clock& clock, HttpTransport* transport = nullptr,
          const MockMemorizerState* mock = nullptr, GatewayOptions options = {});

  const BackendConfig& config() const noexcept { return config_; }

  // Throws Error{Precondition | Transport | AuthFailure | MissingRecord | ConfigError}.
  std::vector<Suggestion> query(const PromptCase& c, const RenderedPrompt& rendered);

  std::string request_digest(const PromptCase& c, const RenderedPrompt& rendered) const;

 private:
  HttpRequest build_request(const RenderedPrompt& rendered) const;
  std::vector<Suggestion> query_http(const PromptCase& c, const RenderedPrompt& rendered, const std::string& digest);

  BackendConfig config_;
  RecordStore* store_;
  Clock* clock_;
  HttpTransport* transport_;
  const MockMemorizerState* mock_;
  GatewayOptions options_;
  RateLimiter limiter_;
  std::string credential_;
  bool auth_failed_ = false;
};

// Values at a dotted path; '*' expands every element of an array.
// Throws Error{MalformedResponse} when the path does not resolve to strings.
std::vector<std::string> extract_path(const json& doc, std::string_view path);

// Replaces {{prefix}}, {{suffix}}, {{prompt}} (JSON-escaped, no quotes) and {{top_k}}.
std::string render_request_template(std::string_view tmpl, const RenderedPrompt& rendered, int top_k);

}  // namespace credmem
