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

#include "credmem/gateway.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <set>

#include "credmem/error.hpp"
#include "credmem/kernels.hpp"

namespace credmem {

namespace fs = std::filesystem;

std::string_view backend_kind_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::InfillHttp: return "infill_http";
    case BackendKind::ChatHttp: return "chat_http";
    case BackendKind::MockMemorizer: return "mock_memorizer";
    case BackendKind::Replay: return "replay";
  }
  return "?";
}

BackendKind backend_kind_from(std::string_view name) {
  for (auto k : {BackendKind::InfillHttp, BackendKind::ChatHttp, BackendKind::MockMemorizer, BackendKind::Replay}) {
    if (backend_kind_name(k) == name) return k;
  }
  throw Error(Errc::ConfigError, "unknown backend kind: " + std::string(name));
}

std::string_view distractor_policy_name(DistractorPolicy p) {
  switch (p) {
    case DistractorPolicy::Empty: return "empty";
    case DistractorPolicy::Perturbed: return "perturbed";
    case DistractorPolicy::Lorem: return "lorem";
  }
  return "?";
}

DistractorPolicy distractor_policy_from(std::string_view name) {
  for (auto p : {DistractorPolicy::Empty, DistractorPolicy::Perturbed, DistractorPolicy::Lorem}) {
    if (distractor_policy_name(p) == name) return p;
  }
  throw Error(Errc::ConfigError, "unknown distractor policy: " + std::string(name));
}

namespace {

bool is_http(BackendKind k) { return k == BackendKind::InfillHttp || k == BackendKind::ChatHttp; }

std::string escape_json_fragment(std::string_view s) {
  std::string quoted = json(std::string(s)).dump(-1, ' ', false, json::error_handler_t::replace);
  return quoted.substr(1, quoted.size() - 2);
}

}  // namespace

void BackendConfig::validate() const {
  auto fail = [&](const std::string& msg) { throw Error(Errc::ConfigError, "backend '" + backend_id + "': " + msg); };
  if (backend_id.empty()) throw Error(Errc::ConfigError, "backend without backend_id");
  if (top_k < 1) fail("top_k must be >= 1");
  if (top_k > 1 && !multi_suggestion) fail("top_k > 1 needs multi_suggestion");
  if (min_query_gap_ms < 0) fail("min_query_gap must be >= 0");
  if (max_attempts < 1 || max_attempts > 3) fail("max_attempts must be in 1..3");
  if (backoff_base_ms < 0 || timeout_ms <= 0) fail("bad backoff or timeout");
  if (is_http(kind)) {
    split_url(endpoint);
    if (request_template.empty()) fail("http backends need a request_template");
    if (response_path.empty()) fail("http backends need a response_path");
  }
  if (kind == BackendKind::MockMemorizer && recall_threshold < 1) fail("recall_threshold must be >= 1");
}

std::vector<BackendConfig> parse_backends(const json& doc) {
  static const std::set<std::string> kForbidden = {"api_key", "apikey", "key", "token", "secret", "password",
                                                   "authorization", "credential", "credentials", "bearer"};
  static const std::set<std::string> kKnown = {
      "backend_id", "kind", "endpoint", "auth_ref", "auth_header", "auth_scheme", "top_k", "multi_suggestion",
      "min_query_gap_ms", "request_template", "response_path", "max_attempts", "backoff_base_ms", "timeout_ms",
      "recall_threshold", "distractor", "replay_of"};

  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("backends")) throw Error(Errc::ConfigError, "backends file lacks a \"backends\" array");
    list = &doc.at("backends");
  }
  if (!list->is_array()) throw Error(Errc::ConfigError, "\"backends\" must be an array");

  std::vector<BackendConfig> out;
  std::set<std::string> ids;
  for (const auto& j : *list) {
    if (!j.is_object()) throw Error(Errc::ConfigError, "backend entries must be objects");
    for (const auto& [k, v] : j.items()) {
      const std::string lower = kernels::ascii_lower(k);
      if (kForbidden.contains(lower)) {
        throw Error(Errc::ConfigError, "key '" + k + "' looks like a credential; use auth_ref to name an environment variable");
      }
      if (!kKnown.contains(k)) throw Error(Errc::ConfigError, "unknown backend key: " + k);
    }
    try {
      BackendConfig b;
      b.backend_id = j.at("backend_id").get<std::string>();
      b.kind = backend_kind_from(j.at("kind").get<std::string>());
      b.endpoint = j.value("endpoint", "");
      b.auth_ref = j.value("auth_ref", "");
      b.auth_header = j.value("auth_header", b.auth_header);
      b.auth_scheme = j.value("auth_scheme", b.auth_scheme);
      b.top_k = j.value("top_k", 1);
      b.multi_suggestion = j.value("multi_suggestion", false);
      b.min_query_gap_ms = j.value("min_query_gap_ms", b.min_query_gap_ms);
      if (j.contains("request_template")) {
        const auto& t = j.at("request_template");
        b.request_template = t.is_string() ? t.get<std::string>() : t.dump();
      }
      b.response_path = j.value("response_path", "");
      b.max_attempts = j.value("max_attempts", b.max_attempts);
      b.backoff_base_ms = j.value("backoff_base_ms", b.backoff_base_ms);
      b.timeout_ms = j.value("timeout_ms", b.timeout_ms);
      b.recall_threshold = j.value("recall_threshold", b.recall_threshold);
      if (j.contains("distractor")) b.distractor = distractor_policy_from(j.at("distractor").get<std::string>());
      b.replay_of = j.value("replay_of", "");
      b.validate();
      if (!ids.insert(b.backend_id).second) throw Error(Errc::ConfigError, "duplicate backend_id: " + b.backend_id);
      out.push_back(std::move(b));
    } catch (const json::exception& e) {
      throw Error(Errc::ConfigError, std::string("bad backend entry: ") + e.what());
    }
  }
  return out;
}

std::vector<BackendConfig> load_backends(const fs::path& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ConfigError, path.string() + ": " + e.what());
  }
  return parse_backends(doc);
}

json to_json(const BackendConfig& b) {
  json j = {{"backend_id", b.backend_id},
            {"kind", backend_kind_name(b.kind)},
            {"top_k", b.top_k},
            {"multi_suggestion", b.multi_suggestion},
            {"min_query_gap_ms", b.min_query_gap_ms},
            {"max_attempts", b.max_attempts},
            {"backoff_base_ms", b.backoff_base_ms},
            {"timeout_ms", b.timeout_ms}};
  if (is_http(b.kind)) {
    j["endpoint"] = b.endpoint;
    j["auth_ref"] = b.auth_ref;
    j["auth_header"] = b.auth_header;
    j["auth_scheme"] = b.auth_scheme;
    j["request_template"] = b.request_template;
    j["response_path"] = b.response_path;
  }
  if (b.kind == BackendKind::MockMemorizer) {
    j["recall_threshold"] = b.recall_threshold;
    j["distractor"] = distractor_policy_name(b.distractor);
  }
  if (b.kind == BackendKind::Replay && !b.replay_of.empty()) j["replay_of"] = b.replay_of;
  return j;
}

json to_json(const Suggestion& s) {
  return {{"case_id", s.case_id},       {"backend_id", s.backend_id},       {"rank", s.rank},
          {"text", s.text},             {"latency_ms", s.latency_ms},       {"retrieved_at_ms", s.retrieved_at_ms}};
}

Suggestion suggestion_from_json(const json& j) {
  try {
    Suggestion s;
    s.case_id = j.at("case_id").get<std::string>();
    s.backend_id = j.at("backend_id").get<std::string>();
    s.rank = j.at("rank").get<int>();
    s.text = j.at("text").get<std::string>();
    s.latency_ms = j.value("latency_ms", std::int64_t{0});
    s.retrieved_at_ms = j.value("retrieved_at_ms", std::int64_t{0});
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad suggestion record: ") + e.what());
  }
}

json to_json(const QueryRecord& r) {
  json sugg = json::array();
  for (const auto& s : r.suggestions) sugg.push_back(to_json(s));
  return {{"backend_id", r.backend_id},
          {"case_id", r.case_id},
          {"request_digest", r.request_digest},
          {"status", r.status},
          {"attempts", r.attempts},
          {"suggestions", std::move(sugg)},
          {"timestamps", {{"requested_at_ms", r.requested_at_ms}, {"responded_at_ms", r.responded_at_ms}}},
          {"run_id", r.run_id}};
}

QueryRecord query_record_from_json(const json& j) {
  try {
    QueryRecord r;
    r.backend_id = j.at("backend_id").get<std::string>();
    r.case_id = j.at("case_id").get<std::string>();
    r.request_digest = j.at("request_digest").get<std::string>();
    r.status = j.value("status", "ok");
    r.attempts = j.value("attempts", 1);
    r.run_id = j.value("run_id", "");
    for (const auto& s : j.at("suggestions")) r.suggestions.push_back(suggestion_from_json(s));
    const auto& ts = j.at("timestamps");
    r.requested_at_ms = ts.at("requested_at_ms").get<std::int64_t>();
    r.responded_at_ms = ts.at("responded_at_ms").get<std::int64_t>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad query record: ") + e.what());
  }
}

RecordStore::RecordStore(const fs::path& path) {
  bool needs_newline = false;
  if (fs::exists(path)) {
    const std::string text = read_file(path);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t nl = text.find('\n', pos);
      const bool complete = nl != std::string::npos;
      if (!complete) nl = text.size();
      const std::string_view line(text.data() + pos, nl - pos);
      ++line_no;
      pos = nl + 1;
      if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      try {
        QueryRecord r = query_record_from_json(json::parse(line));
        latest_[{r.backend_id, r.case_id}] = records_.size();
        records_.push_back(std::move(r));
      } catch (const std::exception& e) {
        if (complete) throw Error(Errc::ParseError, path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        std::cerr << "warning: " << path.string() << ": ignoring truncated final record\n";
      }
    }
    needs_newline = !text.empty() && text.back() != '\n';
  } else if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  fd_ = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error(Errc::Io, "cannot open record store " + path.string() + ": " + std::strerror(errno));
  if (needs_newline && ::write(fd_, "\n", 1) != 1) {
    throw Error(Errc::Io, "cannot write record store " + path.string());
  }
}

RecordStore::~RecordStore() {
  if (fd_ >= 0) ::close(fd_);
}

void RecordStore::append(const QueryRecord& record) {
  const std::string line = to_json(record).dump() + "\n";
  std::lock_guard lock(mu_);
  if (fd_ >= 0) {
    std::size_t off = 0;
    while (off < line.size()) {
      const ssize_t n = ::write(fd_, line.data() + off, line.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw Error(Errc::Io, std::string("record store write failed: ") + std::strerror(errno));
      }
      off += static_cast<std::size_t>(n);
    }
  }
  latest_[{record.backend_id, record.case_id}] = records_.size();
  records_.push_back(record);
}

std::optional<QueryRecord> RecordStore::find(std::string_view backend_id, std::string_view case_id) const {
  std::lock_guard lock(mu_);
  const auto it = latest_.find({std::string(backend_id), std::string(case_id)});
  if (it == latest_.end()) return std::nullopt;
  return records_[it->second];
}

std::vector<QueryRecord> RecordStore::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

std::vector<Suggestion> replay(const RecordStore& store, std::string_view backend_id, std::string_view case_id) {
  auto rec = store.find(backend_id, case_id);
  if (!rec) {
    throw Error(Errc::MissingRecord,
                "no record for backend '" + std::string(backend_id) + "' case '" + std::string(case_id) + "'");
  }
  return std::move(rec->suggestions);
}

std::map<std::string, PlantedSecret> count_planted(const std::vector<SecretOccurrence>& occs) {
  std::map<std::string, PlantedSecret> out;
  for (const auto& o : occs) {
    auto& p = out[o.matched_text];
    p.type_id = o.secret_type_id;
    ++p.count;
  }
  return out;
}

std::vector<Suggestion> mock_respond(const MockMemorizerState& state, const PromptCase& c,
                                     std::string_view backend_id) {
  Suggestion s;
  s.case_id = c.case_id;
  s.backend_id = std::string(backend_id);
  s.rank = 1;

  if (const auto it = state.planted.find(c.ground_truth);
      it != state.planted.end() && it->second.count >= state.recall_threshold) {
    s.text = c.ground_truth;
    return {s};
  }

  const std::string* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& [text, p] : state.planted) {  // lexicographic order settles ties
    if (p.type_id == c.secret_type_id && p.count >= state.recall_threshold && p.count > best_count) {
      best = &text;
      best_count = p.count;
    }
  }
  if (best != nullptr) {
    s.text = *best;
    return {s};
  }

  switch (state.distractor) {
    case DistractorPolicy::Empty:
      break;
    case DistractorPolicy::Lorem:
      s.text = "lorem ipsum dolor sit amet";
      break;
    case DistractorPolicy::Perturbed:
      if (state.registry == nullptr || !state.registry->contains(c.secret_type_id)) {
        s.text = "lorem ipsum dolor sit amet";
      } else {
        s.text = generate_example_secret(state.registry->spec(c.secret_type_id),
                                         mix_seed(state.seed, fnv1a64(c.case_id)));
      }
      break;
  }
  return {s};
}

std::vector<std::string> extract_path(const json& doc, std::string_view path) {
  std::vector<const json*> cur{&doc};
  std::size_t pos = 0;
  while (pos <= path.size() && !path.empty()) {
    std::size_t dot = path.find('.', pos);
    if (dot == std::string_view::npos) dot = path.size();
    const std::string seg(path.substr(pos, dot - pos));
    pos = dot + 1;
    std::vector<const json*> next;
    for (const json* node : cur) {
      if (seg == "*") {
        if (!node->is_array()) throw Error(Errc::MalformedResponse, "'*' applied to a non-array");
        for (const auto& el : *node) next.push_back(&el);
      } else if (node->is_array() && !seg.empty() && std::all_of(seg.begin(), seg.end(), ::isdigit)) {
        const std::size_t idx = std::stoul(seg);
        if (idx >= node->size()) throw Error(Errc::MalformedResponse, "index out of range: " + seg);
        next.push_back(&(*node)[idx]);
      } else if (node->is_object() && node->contains(seg)) {
        next.push_back(&node->at(seg));
      } else {
        throw Error(Errc::MalformedResponse, "path segment not found: " + seg);
      }
    }
    cur = std::move(next);
    if (dot == path.size()) break;
  }
  std::vector<std::string> out;
  for (const json* node : cur) {
    if (!node->is_string()) throw Error(Errc::MalformedResponse, "path does not lead to a string");
    out.push_back(node->get<std::string>());
  }
  return out;
}

std::string render_request_template(std::string_view tmpl, const RenderedPrompt& rendered, int top_k) {
  std::string prefix, suffix, prompt;
  if (const auto* infill = std::get_if<std::pair<std::string, std::string>>(&rendered)) {
    prefix = infill->first;
    suffix = infill->second;
    prompt = infill->first;
  } else {
    prompt = std::get<ChatPrompt>(rendered).text;
  }
  // Substitute in one pass so inserted text is never re-scanned for placeholders.
  std::string out;
  out.reserve(tmpl.size() + prompt.size() + suffix.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const std::size_t open = tmpl.find("{{", pos);
    if (open == std::string_view::npos) break;
    const std::size_t close = tmpl.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    const std::string_view name = tmpl.substr(open + 2, close - open - 2);
    std::string value;
    bool known = true;
    if (name == "prefix") value = escape_json_fragment(prefix);
    else if (name == "suffix") value = escape_json_fragment(suffix);
    else if (name == "prompt") value = escape_json_fragment(prompt);
    else if (name == "top_k") value = std::to_string(top_k);
    else known = false;
    out.append(tmpl.substr(pos, open - pos));
    if (known) {
      out += value;
    } else {
      out.append(tmpl.substr(open, close + 2 - open));
    }
    pos = close + 2;
  }
  out.append(tmpl.substr(pos));
  return out;
}

Gateway::Gateway(BackendConfig config, RecordStore& store, Clock& clock, HttpTransport* transport,
                 const MockMemorizerState* mock, GatewayOptions options)
    : config_(std::move(config)),
      store_(&store),
      clock_(&clock),
      transport_(transport),
      mock_(mock),
      options_(options),
      limiter_(clock, config_.min_query_gap_ms) {
  config_.validate();
  if (is_http(config_.kind)) {
    if (transport_ == nullptr) throw Error(Errc::ConfigError, "backend '" + config_.backend_id + "' needs a transport");
    if (!config_.auth_ref.empty()) {
      const char* v = std::getenv(config_.auth_ref.c_str());
      if (v == nullptr || *v == '\0') {
        throw Error(Errc::ConfigError, "credential slot " + config_.auth_ref + " is not set in the environment");
      }
      credential_ = v;
    }
  }
  if (config_.kind == BackendKind::MockMemorizer && mock_ == nullptr) {
    throw Error(Errc::ConfigError, "backend '" + config_.backend_id + "' needs mock state");
  }
}

std::string Gateway::request_digest(const PromptCase& c, const RenderedPrompt& rendered) const {
  json j = {{"backend_id", config_.backend_id}, {"kind", backend_kind_name(config_.kind)}, {"top_k", config_.top_k},
            {"case_id", c.case_id}};
  if (const auto* infill = std::get_if<std::pair<std::string, std::string>>(&rendered)) {
    j["prefix"] = infill->first;
    j["suffix"] = infill->second;
  } else {
    j["prompt"] = std::get<ChatPrompt>(rendered).text;
  }
  return sha256_hex(j.dump(-1, ' ', false, json::error_handler_t::replace));
}

HttpRequest Gateway::build_request(const RenderedPrompt& rendered) const {
  HttpRequest req;
  req.method = "POST";
  req.url = config_.endpoint;
  req.headers.emplace_back("Content-Type", "application/json");
  if (!credential_.empty()) {
    req.headers.emplace_back(config_.auth_header,
                             config_.auth_scheme.empty() ? credential_ : config_.auth_scheme + " " + credential_);
  }
  req.body = render_request_template(config_.request_template, rendered, config_.top_k);
  return req;
}

std::vector<Suggestion> Gateway::query(const PromptCase& c, const RenderedPrompt& rendered) {
  const bool infill = std::holds_alternative<std::pair<std::string, std::string>>(rendered);
  if ((config_.kind == BackendKind::InfillHttp && !infill) || (config_.kind == BackendKind::ChatHttp && infill)) {
    throw Error(Errc::Precondition, "rendered prompt form does not match backend '" + config_.backend_id + "'");
  }
  if (config_.kind == BackendKind::Replay) {
    return replay(*store_, config_.replay_of.empty() ? config_.backend_id : config_.replay_of, c.case_id);
  }

  const std::string digest = request_digest(c, rendered);
  if (options_.reuse_records) {
    if (auto rec = store_->find(config_.backend_id, c.case_id); rec && rec->request_digest == digest) {
      return std::move(rec->suggestions);
    }
  }

  if (config_.kind == BackendKind::MockMemorizer) {
    QueryRecord rec;
    rec.backend_id = config_.backend_id;
    rec.case_id = c.case_id;
    rec.request_digest = digest;
    rec.run_id = options_.run_id;
    rec.requested_at_ms = limiter_.acquire();
    rec.suggestions = mock_respond(*mock_, c, config_.backend_id);
    rec.responded_at_ms = clock_->now_ms();
    for (auto& s : rec.suggestions) {
      s.latency_ms = rec.responded_at_ms - rec.requested_at_ms;
      s.retrieved_at_ms = rec.responded_at_ms;
    }
    if (static_cast<int>(rec.suggestions.size()) > config_.top_k) rec.suggestions.resize(config_.top_k);
    store_->append(rec);
    return rec.suggestions;
  }
  return query_http(c, rendered, digest);
}

std::vector<Suggestion> Gateway::query_http(const PromptCase& c, const RenderedPrompt& rendered,
                                            const std::string& digest) {
  if (auth_failed_) throw Error(Errc::AuthFailure, "backend '" + config_.backend_id + "' rejected its credential");
  const HttpRequest req = build_request(rendered);

  std::string last_error;
  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    if (attempt > 1) clock_->sleep_ms(config_.backoff_base_ms << (attempt - 2));
    const std::int64_t started = limiter_.acquire();
    HttpResponse resp;
    try {
      resp = transport_->send(req);
    } catch (const Error& e) {
      if (e.code() != Errc::Transport) throw;
      last_error = e.what();
      continue;
    }
    const std::int64_t finished = clock_->now_ms();

    if (resp.status == 401 || resp.status == 403) {
      auth_failed_ = true;
      throw Error(Errc::AuthFailure,
                  "backend '" + config_.backend_id + "' answered " + std::to_string(resp.status));
    }
    if (resp.status == 429 || resp.status >= 500) {
      last_error = "HTTP " + std::to_string(resp.status);
      continue;
    }

    QueryRecord rec;
    rec.backend_id = config_.backend_id;
    rec.case_id = c.case_id;
    rec.request_digest = digest;
    rec.run_id = options_.run_id;
    rec.requested_at_ms = started;
    rec.responded_at_ms = finished;
    rec.attempts = attempt;
    try {
      if (resp.status < 200 || resp.status >= 300) {
        throw Error(Errc::MalformedResponse, "HTTP " + std::to_string(resp.status));
      }
      const json doc = json::parse(resp.body);
      std::vector<std::string> texts = extract_path(doc, config_.response_path);
      if (static_cast<int>(texts.size()) > config_.top_k) texts.resize(config_.top_k);
      for (std::size_t i = 0; i < texts.size(); ++i) {
        rec.suggestions.push_back(Suggestion{c.case_id, config_.backend_id, static_cast<int>(i + 1),
                                             std::move(texts[i]), finished - started, finished});
      }
    } catch (const std::exception& e) {
      std::cerr << "warning: backend '" << config_.backend_id << "' case " << c.case_id
                << ": malformed response (" << e.what() << ")\n";
      rec.status = "malformed";
      rec.suggestions.clear();
    }
    store_->append(rec);
    return rec.suggestions;
  }
  throw Error(Errc::Transport, "backend '" + config_.backend_id + "' gave no usable answer after " +
                                   std::to_string(config_.max_attempts) + " attempts: " + last_error);
}

}  // namespace credmem
