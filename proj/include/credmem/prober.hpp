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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "credmem/filters.hpp"
#include "credmem/http.hpp"
#include "credmem/registry.hpp"
#include "credmem/util.hpp"

namespace credmem {

enum class ProbeMode { DryRun, Stub, Live };
std::string_view probe_mode_name(ProbeMode m);
ProbeMode probe_mode_from(std::string_view name);  // throws Error{ConfigError}

struct ProbeSpec {
  std::string secret_type_id;
  std::string method = "GET";
  std::string endpoint_template;
  std::vector<std::string> headers;  // "Name: value" with {{secret}} / {{secret_basic}}
  std::string body;
  std::set<int> success_statuses;
  ProbeMode mode = ProbeMode::DryRun;
  std::string stub_origin;  // Stub: "http://127.0.0.1:PORT" replacing the real origin

  // Live needs a validatable type and `ack_live`; otherwise Error{EthicsGate}.
  // Types without a probe record fail with Error{ConfigError} outside dry-run.
  static ProbeSpec from_registry(const Registry& registry, std::string_view type_id, ProbeMode mode,
                                 bool ack_live = false, std::string stub_origin = {});
};

enum class ProbeOutcome { NotAttempted, Valid, Invalid, Indeterminate };
std::string_view probe_outcome_name(ProbeOutcome o);

struct ProbeResult {
  std::string candidate_id;
  ProbeOutcome outcome = ProbeOutcome::NotAttempted;
  std::optional<int> status_code;
  std::string note;  // never carries the secret in clear
};

json to_json(const ProbeResult& r);

// The request a probe would send for `secret`.
HttpRequest render_probe_request(const ProbeSpec& spec, std::string_view secret);

class Prober {
 public:
  // `transport` may be null in dry-run mode.
  Prober(ProbeSpec spec, const Registry& registry, HttpTransport* transport, Clock& clock, std::int64_t min_gap_ms);

  // Throws Error{NotPlausible | Precondition | Transport}.
  ProbeResult probe(const CandidateSecret& candidate);

  const ProbeSpec& spec() const noexcept { return spec_; }

 private:
  ProbeSpec spec_;
  const SecretTypeSpec* type_;
  HttpTransport* transport_;
  RateLimiter limiter_;
};

}  // namespace credmem
