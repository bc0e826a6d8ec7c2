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

#include "credmem/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "credmem/analysis.hpp"
#include "credmem/corpus.hpp"
#include "credmem/error.hpp"
#include "credmem/filters.hpp"
#include "credmem/prober.hpp"
#include "credmem/prompt.hpp"

namespace credmem {

namespace fs = std::filesystem;

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::Scan: return "scan";
    case Stage::Prompts: return "prompts";
    case Stage::Query: return "query";
    case Stage::Filter: return "filter";
    case Stage::Classify: return "classify";
    case Stage::Stats: return "stats";
    case Stage::Report: return "report";
    case Stage::Probe: return "probe";
    case Stage::E2E: return "e2e";
  }
  return "?";
}

Stage stage_from(std::string_view name) {
  for (auto s : {Stage::Scan, Stage::Prompts, Stage::Query, Stage::Filter, Stage::Classify, Stage::Stats,
                 Stage::Report, Stage::Probe, Stage::E2E}) {
    if (stage_name(s) == name) return s;
  }
  throw Error(Errc::ConfigError, "unknown stage: " + std::string(name));
}

BackendConfig default_mock_backend() {
  BackendConfig b;
  b.backend_id = "mock";
  b.kind = BackendKind::MockMemorizer;
  b.recall_threshold = 3;
  b.distractor = DistractorPolicy::Perturbed;
  return b;
}

std::vector<BackendConfig> resolve_backends(const PipelineConfig& config) {
  std::vector<BackendConfig> all{default_mock_backend()};
  if (!config.backends_path.empty()) {
    try {
      all = load_backends(config.backends_path);
    } catch (const Error& e) {
      if (e.code() != Errc::Io && e.code() != Errc::ParseError) throw;
      throw Error(Errc::ConfigError, e.what());
    }
  }
  std::vector<BackendConfig> chosen;
  if (config.backend_ids.empty()) {
    chosen = all;
  } else {
    for (const auto& id : config.backend_ids) {
      const auto it = std::find_if(all.begin(), all.end(), [&](const BackendConfig& b) { return b.backend_id == id; });
      if (it == all.end()) throw Error(Errc::ConfigError, "no backend named '" + id + "'");
      chosen.push_back(*it);
    }
  }
  for (auto& b : chosen) {
    if (config.top_k) b.top_k = *config.top_k;
    if (config.min_gap_seconds) {
      if (*config.min_gap_seconds < 0) throw Error(Errc::ConfigError, "--min-gap must be >= 0");
      b.min_query_gap_ms = static_cast<std::int64_t>(*config.min_gap_seconds * 1000.0 + 0.5);
    }
    b.validate();
  }
  return chosen;
}

std::vector<std::map<std::string, std::string>> read_csv(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return cells;
  };
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line.starts_with("# ")) continue;
    auto cells = split(line);
    if (header.empty()) {
      header = std::move(cells);
      continue;
    }
    if (cells.size() != header.size()) throw Error(Errc::ParseError, path.string() + ": ragged row: " + line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < cells.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

fs::path artifact(const PipelineConfig& c, std::string_view name) { return c.out_dir / std::string(name); }

fs::path upstream(const PipelineConfig& c, std::string_view name) {
  const fs::path p = artifact(c, name);
  if (!fs::exists(p)) throw Error(Errc::MissingUpstream, "missing upstream artifact " + p.string());
  return p;
}

json load_manifest(const PipelineConfig& c) {
  const fs::path p = upstream(c, artifacts::kManifest);
  try {
    return json::parse(read_file(p));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, p.string() + ": " + e.what());
  }
}

void save_manifest(const PipelineConfig& c, const json& m) {
  write_file_atomic(artifact(c, artifacts::kManifest), m.dump(2) + "\n");
}

void mark_done(const PipelineConfig& c, json& manifest, Stage stage, json details) {
  details["done"] = true;
  manifest["stages"][std::string(stage_name(stage))] = std::move(details);
  save_manifest(c, manifest);
}

std::string run_id_of(const json& manifest) { return manifest.at("run_id").get<std::string>(); }

void write_jsonl(const PipelineConfig& c, std::string_view name, std::vector<json> records, const std::string& run_id) {
  for (auto& r : records) r["run_id"] = run_id;
  write_file_atomic(artifact(c, name), to_jsonl(records));
}

void write_csv(const PipelineConfig& c, std::string_view name, const std::string& csv, const std::string& run_id) {
  write_file_atomic(artifact(c, name), "# run_id=" + run_id + "\n" + csv);
}

std::vector<SecretOccurrence> read_occurrences(const PipelineConfig& c) {
  std::vector<SecretOccurrence> out;
  for_each_jsonl(upstream(c, artifacts::kOccurrences), [&](const json& j) { out.push_back(occurrence_from_json(j)); });
  return out;
}

std::vector<PromptCase> read_cases(const PipelineConfig& c) {
  std::vector<PromptCase> out;
  for_each_jsonl(upstream(c, artifacts::kCases), [&](const json& j) { out.push_back(prompt_case_from_json(j)); });
  return out;
}

std::vector<Suggestion> read_suggestions(const PipelineConfig& c) {
  std::vector<Suggestion> out;
  for_each_jsonl(upstream(c, artifacts::kSuggestions), [&](const json& j) { out.push_back(suggestion_from_json(j)); });
  return out;
}

std::vector<CandidateSecret> read_candidates(const PipelineConfig& c) {
  std::vector<CandidateSecret> out;
  for_each_jsonl(upstream(c, artifacts::kCandidates), [&](const json& j) { out.push_back(candidate_from_json(j)); });
  return out;
}

std::map<std::string, MemorizationLabel> read_labels(const PipelineConfig& c) {
  std::map<std::string, MemorizationLabel> out;
  for_each_jsonl(upstream(c, artifacts::kLabels), [&](const json& j) {
    const int v = j.at("label").get<int>();
    if (v < 1 || v > 3) throw Error(Errc::ParseError, "label out of range");
    out[j.at("candidate_id").get<std::string>()] = static_cast<MemorizationLabel>(v);
  });
  return out;
}

std::map<std::string, std::string> case_types_of(const std::vector<PromptCase>& cases) {
  std::map<std::string, std::string> out;
  for (const auto& c : cases) out[c.case_id] = c.secret_type_id;
  return out;
}

Dictionary load_dictionary(const PipelineConfig& c) {
  if (c.dictionary_path.empty()) throw Error(Errc::DictionaryMissing, "no dictionary configured");
  return Dictionary::load(c.dictionary_path);
}

std::vector<CorpusDocument> load_checked_corpus(const PipelineConfig& c, const json& manifest) {
  auto docs = load_corpus(c.corpus_path);
  if (corpus_digest(docs) != manifest.at("corpus_digest").get<std::string>()) {
    throw Error(Errc::ConfigError, "corpus changed since the scan stage of run " + run_id_of(manifest));
  }
  return docs;
}

void stage_scan(const PipelineConfig& c) {
  if (c.corpus_path.empty()) throw Error(Errc::ConfigError, "--corpus is required");
  const Registry registry = Registry::load(c.registry_path);
  const auto docs = load_corpus(c.corpus_path);
  ScanOptions opts;
  opts.threads = c.threads;
  const auto occs = scan_corpus(docs, registry, opts);

  const std::string registry_digest = sha256_hex(registry.serialize());
  const std::string corpus_dig = corpus_digest(docs);
  const std::string run_id =
      sha256_hex(registry_digest + "\n" + corpus_dig + "\n" + std::to_string(c.seed)).substr(0, 16);

  json manifest = {{"run_id", run_id},
                   {"registry_digest", registry_digest},
                   {"corpus_digest", corpus_dig},
                   {"seeds", {{"run", c.seed}}},
                   {"tokenizer_id", CharClassTokenizer{}.id()},
                   {"stages", json::object()}};
  fs::create_directories(c.out_dir);

  std::vector<json> records;
  records.reserve(occs.size());
  for (const auto& o : occs) records.push_back(to_json(o));
  write_jsonl(c, artifacts::kOccurrences, std::move(records), run_id);
  mark_done(c, manifest, Stage::Scan, {{"documents", docs.size()}, {"occurrences", occs.size()}});
}

void stage_prompts(const PipelineConfig& c) {
  json manifest = load_manifest(c);
  const std::string run_id = run_id_of(manifest);
  if (c.per_type == 0) throw Error(Errc::ConfigError, "--per-type must be > 0");
  const Registry registry = Registry::load(c.registry_path);
  const auto docs = load_checked_corpus(c, manifest);
  const auto occs = read_occurrences(c);

  std::map<std::string, const CorpusDocument*> by_id;
  for (const auto& d : docs) by_id[d.doc_id] = &d;
  std::map<std::string, std::vector<SecretOccurrence>> firsts;
  for (const auto& o : occs) {
    if (o.is_first_in_doc) firsts[o.secret_type_id].push_back(o);
  }

  CharClassTokenizer tokenizer;
  std::vector<PromptCase> cases;
  json per_type = json::object();
  for (const auto& [type_id, spec] : registry.specs()) {
    const auto it = firsts.find(type_id);
    if (it == firsts.end()) {
      per_type[type_id] = 0;
      continue;
    }
    const auto chosen = sample_occurrences(it->second, c.per_type, mix_seed(c.seed, fnv1a64(type_id)));
    per_type[type_id] = chosen.size();
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const auto doc_it = by_id.find(chosen[i].doc_id);
      if (doc_it == by_id.end()) throw Error(Errc::ConfigError, "occurrence for unknown document " + chosen[i].doc_id);
      char suffix[16];
      std::snprintf(suffix, sizeof suffix, "-%04zu", i + 1);
      cases.push_back(build_prompt_case(*doc_it->second, chosen[i], registry, type_id + suffix, tokenizer));
    }
  }

  std::vector<json> records;
  for (const auto& pc : cases) records.push_back(to_json(pc));
  write_jsonl(c, artifacts::kCases, std::move(records), run_id);
  if (c.redact_ground_truth) {
    const std::string salt = sha256_hex("credmem-share-salt\n" + run_id);
    std::vector<json> shared;
    for (const auto& pc : cases) shared.push_back(to_shareable_json(pc, salt));
    write_jsonl(c, artifacts::kShareableCases, std::move(shared), run_id);
  }
  mark_done(c, manifest, Stage::Prompts,
            {{"per_type", c.per_type}, {"cases", cases.size()}, {"cases_per_type", per_type},
             {"redact_ground_truth", c.redact_ground_truth}});
}

void stage_query(const PipelineConfig& c, bool mock_only) {
  json manifest = load_manifest(c);
  const std::string run_id = run_id_of(manifest);
  const Registry registry = Registry::load(c.registry_path);
  const auto cases = read_cases(c);
  const auto backends = resolve_backends(c);
  if (mock_only) {
    for (const auto& b : backends) {
      if (b.kind != BackendKind::MockMemorizer && b.kind != BackendKind::Replay) {
        throw Error(Errc::ConfigError, "e2e runs over mock or replay backends only; '" + b.backend_id + "' is http");
      }
    }
  }

  MockMemorizerState mock;
  mock.planted = count_planted(read_occurrences(c));
  mock.seed = c.seed;
  mock.registry = &registry;

  RecordStore store(artifact(c, artifacts::kRecords));
  std::vector<Suggestion> all;
  json backend_json = json::array();
  for (const auto& b : backends) {
    backend_json.push_back(to_json(b));
    mock.recall_threshold = b.recall_threshold;
    mock.distractor = b.distractor;
    ManualClock logical;
    SystemClock wall;
    const bool http = b.kind == BackendKind::InfillHttp || b.kind == BackendKind::ChatHttp;
    std::unique_ptr<HttpTransport> transport;
    if (http) transport = make_http_transport(std::chrono::milliseconds(b.timeout_ms));
    GatewayOptions opts;
    opts.run_id = run_id;
    Gateway gw(b, store, http ? static_cast<Clock&>(wall) : static_cast<Clock&>(logical), transport.get(), &mock,
               opts);
    for (const auto& pc : cases) {
      RenderedPrompt rendered;
      if (b.kind == BackendKind::ChatHttp) {
        rendered = render_chat(pc, registry.spec(pc.secret_type_id));
      } else {
        rendered = render_infill(pc);
      }
      for (auto& s : gw.query(pc, rendered)) all.push_back(std::move(s));
    }
  }

  std::vector<json> records;
  for (const auto& s : all) records.push_back(to_json(s));
  write_jsonl(c, artifacts::kSuggestions, std::move(records), run_id);
  const std::string config_digest = sha256_hex(backend_json.dump());
  mark_done(c, manifest, Stage::Query,
            {{"backends", backend_json}, {"config_digest", config_digest}, {"suggestions", all.size()}});
  manifest["backend_ids"] = json::array();
  for (const auto& b : backends) manifest["backend_ids"].push_back(b.backend_id);
  manifest["config_digest"] = config_digest;
  save_manifest(c, manifest);
}

void stage_filter(const PipelineConfig& c) {
  json manifest = load_manifest(c);
  const std::string run_id = run_id_of(manifest);
  const Registry registry = Registry::load(c.registry_path);
  const Dictionary dictionary = load_dictionary(c);
  const auto cases = read_cases(c);
  const auto suggestions = read_suggestions(c);
  const auto result = run_cascade(suggestions, case_types_of(cases), registry, dictionary);

  std::vector<json> records;
  for (const auto& cand : result.candidates) records.push_back(to_json(cand));
  write_jsonl(c, artifacts::kCandidates, std::move(records), run_id);
  write_csv(c, artifacts::kFunnel, funnel_csv(result.funnel), run_id);
  mark_done(c, manifest, Stage::Filter,
            {{"dictionary_digest", sha256_hex(read_file(c.dictionary_path))}, {"candidates", result.candidates.size()}});
}

void stage_classify(const PipelineConfig& c) {
  json manifest = load_manifest(c);
  const std::string run_id = run_id_of(manifest);
  const auto candidates = read_candidates(c);
  const auto cases = read_cases(c);
  CorpusIndex index;
  index.built_from = manifest.at("corpus_digest").get<std::string>();
  for (const auto& o : read_occurrences(c)) index.entries[o.matched_text].push_back({o.doc_id, o.byte_span});

  std::map<std::string, const PromptCase*> by_id;
  for (const auto& pc : cases) by_id[pc.case_id] = &pc;
  std::vector<json> records;
  std::size_t counts[4] = {};
  for (const auto& cand : candidates) {
    if (!cand.plausible) continue;
    const auto it = by_id.find(cand.case_id);
    if (it == by_id.end()) throw Error(Errc::InconsistentInputs, "candidate for unknown case " + cand.case_id);
    const auto label = classify(cand, *it->second, index);
    ++counts[static_cast<int>(label)];
    records.push_back({{"candidate_id", cand.candidate_id}, {"label", static_cast<int>(label)},
                       {"label_name", label_name(label)}});
  }
  write_jsonl(c, artifacts::kLabels, std::move(records), run_id);
  mark_done(c, manifest, Stage::Classify,
            {{"index_entries", index.size()}, {"not", counts[1]}, {"weak", counts[2]}, {"strong", counts[3]}});
}

std::string fmt_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void stage_stats(const PipelineConfig& c) {
  json manifest = load_manifest(c);
  const std::string run_id = run_id_of(manifest);
  if (!(c.sig_level > 0.0 && c.sig_level < 1.0)) throw Error(Errc::ConfigError, "--sig-level must be in (0, 1)");
  const auto candidates = read_candidates(c);
  const auto labels = read_labels(c);
  const auto suggestions = read_suggestions(c);
  const auto cases = read_cases(c);

  const auto table = compute_metrics_table(candidates, labels, suggestions, case_types_of(cases));
  write_csv(c, artifacts::kMetrics, metrics_csv(table), run_id);

  std::set<std::string> backends;
  for (const auto& s : suggestions) backends.insert(s.backend_id);
  std::string csv = "backend,feature,pair,n_x,n_y,U,p,method,significant\n";
  for (const auto& backend : backends) {
    std::vector<CandidateSecret> mine;
    for (const auto& cand : candidates) {
      if (cand.backend_id == backend) mine.push_back(cand);
    }
    const auto report = feature_tests(cases, case_labels(cases, mine, labels));
    for (const auto& r : report.results) {
      char u[32];
      std::snprintf(u, sizeof u, "%.1f", r.u);
      csv += backend + "," + r.variable + "," + r.pair_name() + "," + std::to_string(r.n_a) + "," +
             std::to_string(r.n_b) + "," + u + "," + fmt_g(r.p_value) + "," + r.method + "," +
             (r.p_value < c.sig_level ? "1" : "0") + "\n";
    }
    for (const auto& s : report.skipped) {
      csv += backend + "," + s.variable + ",mwu_" + std::to_string(s.group_a) + std::to_string(s.group_b) +
             ",,,,,skipped,0\n";
    }
  }
  write_csv(c, artifacts::kStats, csv, run_id);
  mark_done(c, manifest, Stage::Stats, {{"sig_level", c.sig_level}, {"metric_rows", table.size()}});
}

std::string cell(const std::map<std::string, std::string>& row, const std::string& key) {
  const auto it = row.find(key);
  if (it == row.end()) throw Error(Errc::ParseError, "missing column " + key);
  return it->second;
}

std::int64_t int_cell(const std::map<std::string, std::string>& row, const std::string& key) {
  try {
    return std::stoll(cell(row, key));
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad integer in column " + key);
  }
}

}  // namespace

std::string render_report(const std::string& run_id, const std::vector<std::map<std::string, std::string>>& metrics,
                          const std::vector<std::map<std::string, std::string>>& funnel,
                          const std::vector<std::map<std::string, std::string>>& stats, double sig_level) {
  // Rebuild every rate from the counts so the report never trusts rounded text.
  std::vector<std::string> backends, types;
  std::map<std::pair<std::string, std::string>, MetricsReport> cells;
  for (const auto& row : metrics) {
    const std::string b = cell(row, "backend"), t = cell(row, "secret_type");
    cells[{b, t}] = MetricsReport::from_counts({b, t}, int_cell(row, "TS#"), int_cell(row, "PS#"), int_cell(row, "MS#"),
                                               int_cell(row, "SMS#"));
    if (std::find(backends.begin(), backends.end(), b) == backends.end()) backends.push_back(b);
    if (t != "ALL" && std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
  }
  std::sort(types.begin(), types.end());
  types.push_back("ALL");

  bool any_degenerate = false;
  auto rate = [&](const MetricsReport& r, const Rational& v, bool zero_den) {
    if (zero_den) any_degenerate = true;
    return r.display(v) + (zero_den ? "*" : "");
  };

  std::string out = "# Memorization audit report\n\nrun_id: " + run_id + "\n\n## Plausible rate\n\n| Secret type |";
  for (const auto& b : backends) out += " " + b + " TS# | " + b + " PS# | " + b + " PR |";
  out += "\n|---|";
  for (std::size_t i = 0; i < backends.size(); ++i) out += "---:|---:|---:|";
  out += "\n";
  for (const auto& t : types) {
    out += "| " + (t == "ALL" ? std::string("**Total**") : t) + " |";
    for (const auto& b : backends) {
      const auto it = cells.find({b, t});
      if (it == cells.end()) {
        out += " - | - | - |";
        continue;
      }
      const auto& r = it->second;
      out += " " + std::to_string(r.ts) + " | " + std::to_string(r.ps) + " | " + rate(r, r.pr, r.ts == 0) + " |";
    }
    out += "\n";
  }

  out += "\n## Memorization\n\n| Backend | Secret type | PS# | MS# | SMS# | WMS# | SMR | WMR | MR |\n"
         "|---|---|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& b : backends) {
    for (const auto& t : types) {
      const auto it = cells.find({b, t});
      if (it == cells.end()) continue;
      const auto& r = it->second;
      const bool z = r.ps == 0;
      out += "| " + b + " | " + (t == "ALL" ? std::string("**Total**") : t) + " | " + std::to_string(r.ps) + " | " +
             std::to_string(r.ms) + " | " + std::to_string(r.sms) + " | " + std::to_string(r.wms) + " | " +
             rate(r, r.smr, z) + " | " + rate(r, r.wmr, z) + " | " + rate(r, r.mr, z) + " |\n";
    }
  }
  if (any_degenerate) out += "\n\\* zero denominator; the rate is reported as 0.\n";

  out += "\n## Filter funnel\n\n| Stage | In | Dropped | Out |\n|---|---:|---:|---:|\n";
  for (const auto& row : funnel) {
    out += "| " + cell(row, "stage") + " | " + cell(row, "in_count") + " | " + cell(row, "dropped") + " | " +
           cell(row, "out_count") + " |\n";
  }

  char sig[32];
  std::snprintf(sig, sizeof sig, "%g", sig_level);
  out += "\n## Context features (Mann-Whitney U, alternative: X < Y, significance " + std::string(sig) +
         ")\n\n| Backend | Feature | Test | n_X | n_Y | U | p | Method | Significant |\n"
         "|---|---|---|---:|---:|---:|---:|---|---|\n";
  for (const auto& row : stats) {
    const bool skipped = cell(row, "method") == "skipped";
    out += "| " + cell(row, "backend") + " | " + cell(row, "feature") + " | " + cell(row, "pair") + " | " +
           (skipped ? std::string("-") : cell(row, "n_x")) + " | " + (skipped ? std::string("-") : cell(row, "n_y")) +
           " | " + (skipped ? std::string("-") : cell(row, "U")) + " | " +
           (skipped ? std::string("-") : cell(row, "p")) + " | " + cell(row, "method") + " | " +
           (skipped ? std::string("-") : cell(row, "significant") == "1" ? std::string("yes") : std::string("no")) +
           " |\n";
  }
  return out;
}

namespace {

void stage_report(const PipelineConfig& c) {
  json manifest = load_manifest(c);
  const std::string run_id = run_id_of(manifest);
  const auto metrics = read_csv(upstream(c, artifacts::kMetrics));
  const auto funnel = read_csv(upstream(c, artifacts::kFunnel));
  const auto stats = read_csv(upstream(c, artifacts::kStats));
  write_file_atomic(artifact(c, artifacts::kReport), render_report(run_id, metrics, funnel, stats, c.sig_level));
  mark_done(c, manifest, Stage::Report, json::object());
}

void stage_probe(const PipelineConfig& c) {
  json manifest = load_manifest(c);
  const std::string run_id = run_id_of(manifest);
  const Registry registry = Registry::load(c.registry_path);
  const ProbeMode mode = probe_mode_from(c.probe_mode);
  if (mode == ProbeMode::Live && !c.ack_live_probe) {
    throw Error(Errc::EthicsGate, "live probing needs --ack-live-probe");
  }
  const auto candidates = read_candidates(c);

  std::unique_ptr<HttpTransport> transport;
  if (mode != ProbeMode::DryRun) transport = make_http_transport();
  SystemClock clock;
  const std::int64_t gap_ms = static_cast<std::int64_t>(c.min_gap_seconds.value_or(30.0) * 1000.0);

  std::map<std::string, std::unique_ptr<Prober>> probers;
  std::vector<json> records;
  for (const auto& cand : candidates) {
    if (!cand.plausible) continue;
    auto it = probers.find(cand.secret_type_id);
    if (it == probers.end()) {
      std::unique_ptr<Prober> p;
      try {
        p = std::make_unique<Prober>(
            ProbeSpec::from_registry(registry, cand.secret_type_id, mode, c.ack_live_probe, c.stub_origin), registry,
            transport.get(), clock, gap_ms);
      } catch (const Error& e) {
        if (e.code() != Errc::EthicsGate && e.code() != Errc::ConfigError) throw;
        std::cerr << "probe: " << cand.secret_type_id << ": " << e.what() << "\n";
      }
      it = probers.emplace(cand.secret_type_id, std::move(p)).first;
    }
    ProbeResult r;
    if (it->second) {
      r = it->second->probe(cand);
    } else {
      r.candidate_id = cand.candidate_id;
      r.note = "not probed: gate closed for " + cand.secret_type_id;
    }
    records.push_back(to_json(r));
  }
  write_jsonl(c, artifacts::kProbes, std::move(records), run_id);
  mark_done(c, manifest, Stage::Probe, {{"mode", probe_mode_name(mode)}});
}

}  // namespace

void run_stage(Stage stage, const PipelineConfig& config) {
  if (config.out_dir.empty()) throw Error(Errc::ConfigError, "--out is required");
  if (config.registry_path.empty()) throw Error(Errc::ConfigError, "--registry is required");
  switch (stage) {
    case Stage::Scan: stage_scan(config); break;
    case Stage::Prompts: stage_prompts(config); break;
    case Stage::Query: stage_query(config, false); break;
    case Stage::Filter: stage_filter(config); break;
    case Stage::Classify: stage_classify(config); break;
    case Stage::Stats: stage_stats(config); break;
    case Stage::Report: stage_report(config); break;
    case Stage::Probe: stage_probe(config); break;
    case Stage::E2E:
      resolve_backends(config);  // fail on config problems before any work
      stage_scan(config);
      stage_prompts(config);
      stage_query(config, true);
      stage_filter(config);
      stage_classify(config);
      stage_stats(config);
      stage_report(config);
      break;
  }
}

}  // namespace credmem
