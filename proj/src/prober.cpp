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

#include "credmem/prober.hpp"

#include "credmem/error.hpp"

namespace credmem {

std::string_view probe_mode_name(ProbeMode m) {
  switch (m) {
    case ProbeMode::DryRun: return "dry_run";
    case ProbeMode::Stub: return "stub";
    case ProbeMode::Live: return "live";
  }
  return "?";
}

ProbeMode probe_mode_from(std::string_view name) {
  for (auto m : {ProbeMode::DryRun, ProbeMode::Stub, ProbeMode::Live}) {
    if (probe_mode_name(m) == name) return m;
  }
  throw Error(Errc::ConfigError, "unknown probe mode: " + std::string(name));
}

std::string_view probe_outcome_name(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::NotAttempted: return "NotAttempted";
    case ProbeOutcome::Valid: return "Valid";
    case ProbeOutcome::Invalid: return "Invalid";
    case ProbeOutcome::Indeterminate: return "Indeterminate";
  }
  return "?";
}

ProbeSpec ProbeSpec::from_registry(const Registry& registry, std::string_view type_id, ProbeMode mode, bool ack_live,
                                   std::string stub_origin) {
  const SecretTypeSpec& t = registry.spec(type_id);
  if (mode == ProbeMode::Live) {
    if (!t.validation_supported) {
      throw Error(Errc::EthicsGate, "live probing is not permitted for " + t.id + " (not a sandbox/test type)");
    }
    if (!ack_live) throw Error(Errc::EthicsGate, "live probing needs an explicit acknowledgment flag");
  }
  ProbeSpec s;
  s.secret_type_id = t.id;
  s.mode = mode;
  if (!t.probe) {
    if (mode != ProbeMode::DryRun) throw Error(Errc::ConfigError, "no probe record for " + t.id);
    return s;
  }
  s.method = t.probe->method;
  s.endpoint_template = t.probe->endpoint;
  s.headers = t.probe->headers;
  s.body = t.probe->body;
  s.success_statuses.insert(t.probe->success_statuses.begin(), t.probe->success_statuses.end());
  if (mode == ProbeMode::Stub) {
    if (stub_origin.empty()) throw Error(Errc::ConfigError, "stub mode needs a fixture server origin");
    split_url(stub_origin + "/");
    s.stub_origin = std::move(stub_origin);
  }
  return s;
}

json to_json(const ProbeResult& r) {
  json j = {{"candidate_id", r.candidate_id}, {"outcome", probe_outcome_name(r.outcome)}};
  j["status"] = r.status_code ? json(*r.status_code) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

namespace {

std::string substitute(std::string text, std::string_view secret) {
  const std::string basic = base64_encode(std::string(secret) + ":");
  for (const auto& [key, value] :
       {std::pair<std::string_view, std::string_view>{"{{secret_basic}}", basic}, {"{{secret}}", secret}}) {
    for (std::size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + value.size())) {
      text.replace(pos, key.size(), value);
    }
  }
  return text;
}

}  // namespace

HttpRequest render_probe_request(const ProbeSpec& spec, std::string_view secret) {
  HttpRequest req;
  req.method = spec.method;
  req.url = substitute(spec.endpoint_template, secret);
  if (!spec.stub_origin.empty()) req.url = spec.stub_origin + split_url(req.url).second;
  for (const auto& h : spec.headers) {
    const std::string line = substitute(h, secret);
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::ConfigError, "probe header without ':'");
    const auto v = line.find_first_not_of(' ', colon + 1);
    req.headers.emplace_back(line.substr(0, colon), v == std::string::npos ? "" : line.substr(v));
  }
  req.body = substitute(spec.body, secret);
  return req;
}

Prober::Prober(ProbeSpec spec, const Registry& registry, HttpTransport* transport, Clock& clock,
               std::int64_t min_gap_ms)
    : spec_(std::move(spec)),
      type_(&registry.spec(spec_.secret_type_id)),
      transport_(transport),
      limiter_(clock, min_gap_ms) {
  // Re-check the gates so a hand-built spec cannot bypass them.
  if (spec_.mode == ProbeMode::Live && !type_->validation_supported) {
    throw Error(Errc::EthicsGate, "live probing is not permitted for " + type_->id);
  }
  if (spec_.mode == ProbeMode::Stub && spec_.stub_origin.empty()) {
    throw Error(Errc::EthicsGate, "stub probes must target a fixture server");
  }
  if (spec_.mode != ProbeMode::DryRun && transport_ == nullptr) {
    throw Error(Errc::ConfigError, "probe mode " + std::string(probe_mode_name(spec_.mode)) + " needs a transport");
  }
}

ProbeResult Prober::probe(const CandidateSecret& candidate) {
  if (!candidate.plausible) throw Error(Errc::NotPlausible, "candidate " + candidate.candidate_id + " is not plausible");
  if (candidate.secret_type_id != spec_.secret_type_id) {
    throw Error(Errc::Precondition, "candidate " + candidate.candidate_id + " is not of type " + spec_.secret_type_id);
  }
  ProbeResult r;
  r.candidate_id = candidate.candidate_id;

  if (spec_.mode == ProbeMode::DryRun) {
    r.outcome = ProbeOutcome::NotAttempted;
    if (spec_.endpoint_template.empty()) {
      r.note = "dry run: no probe defined for " + spec_.secret_type_id;
      return r;
    }
    // Preview with a masked secret in place of the real one.
    const HttpRequest req = render_probe_request(spec_, mask_secret(*type_, candidate.raw_text));
    r.note = "dry run: " + req.method + " " + req.url;
    for (const auto& [k, v] : req.headers) r.note += " | " + k + ": " + v;
    return r;
  }

  const HttpRequest req = render_probe_request(spec_, candidate.raw_text);
  limiter_.acquire();
  const HttpResponse resp = transport_->send(req);  // the body is dropped unread
  r.status_code = resp.status;
  if (spec_.success_statuses.contains(resp.status)) {
    r.outcome = ProbeOutcome::Valid;
  } else if (resp.status == 401 || resp.status == 403) {
    r.outcome = ProbeOutcome::Invalid;
  } else {
    r.outcome = ProbeOutcome::Indeterminate;
  }
  return r;
}

}  // namespace credmem
