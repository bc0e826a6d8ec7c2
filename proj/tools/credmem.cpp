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

#include <CLI11.hpp>

#include <iostream>

#include "credmem/error.hpp"
#include "credmem/filters.hpp"
#include "credmem/pipeline.hpp"
#include "credmem/registry.hpp"
#include "credmem/synth.hpp"

namespace {

constexpr int kStageError = 1;
constexpr int kConfigError = 2;

struct Flags {
  credmem::PipelineConfig config;
  std::optional<int> top_k;
  double min_gap = 30.0;
};

void add_common(CLI::App* sub, Flags& f) {
  auto& c = f.config;
  sub->add_option("--registry", c.registry_path, "secret type registry")->capture_default_str();
  sub->add_option("--dictionary", c.dictionary_path, "word list for the word filter")->capture_default_str();
  sub->add_option("--out", c.out_dir, "artifact directory")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"credmem: audit code-completion models for memorized hard-coded credentials"};
  app.require_subcommand(1);
  Flags f;
  auto& c = f.config;
  c.registry_path = CREDMEM_DATA_DIR "/registry.conf";
  c.dictionary_path = CREDMEM_DATA_DIR "/words.txt";

  const std::vector<std::string> stages = {"scan",  "prompts", "query",  "filter", "classify",
                                           "stats", "report",  "probe", "e2e"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : stages) {
    auto* sub = app.add_subcommand(name, "run the " + name + " stage");
    add_common(sub, f);
    sub->add_option("--corpus", c.corpus_path, "corpus directory");
    sub->add_option("--backends", c.backends_path, "backend config (JSON); default: built-in mock");
    sub->add_option("--backend", c.backend_ids, "backend id to use (repeatable)");
    sub->add_option("--top-k", f.top_k, "suggestions per query")->check(CLI::PositiveNumber);
    sub->add_option("--min-gap", f.min_gap, "seconds between queries")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--seed", c.seed, "run-level seed")->capture_default_str();
    sub->add_option("--per-type", c.per_type, "prompts per secret type")->capture_default_str();
    sub->add_option("--sig-level", c.sig_level, "significance level for the feature tests")->capture_default_str();
    sub->add_flag("--redact-ground-truth", c.redact_ground_truth, "also write a shareable case file with hashed secrets");
    sub->add_flag("--ack-live-probe", c.ack_live_probe, "acknowledge live validation of sandbox credentials");
    sub->add_option("--probe-mode", c.probe_mode, "dry_run, stub or live")
        ->check(CLI::IsMember({"dry_run", "stub", "live"}))
        ->capture_default_str();
    sub->add_option("--stub-origin", c.stub_origin, "origin of a local stub server for stub probing");
    sub->add_option("--threads", c.threads, "scan workers (0: all cores)");
    subs[name] = sub;
  }

  auto* synth = app.add_subcommand("synth", "write the seeded synthetic corpus used by e2e");
  credmem::SynthOptions synth_opts;
  synth->add_option("--registry", c.registry_path)->capture_default_str();
  synth->add_option("--dictionary", c.dictionary_path)->capture_default_str();
  synth->add_option("--out", c.out_dir)->required();
  synth->add_option("--seed", synth_opts.seed)->capture_default_str();
  synth->add_option("--files-per-type", synth_opts.files_per_type)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    if (synth->parsed()) {
      const auto registry = credmem::Registry::load(c.registry_path);
      const auto dictionary = credmem::Dictionary::load(c.dictionary_path);
      credmem::write_synth_corpus(credmem::synthesize_corpus(registry, dictionary, synth_opts), c.out_dir);
      return 0;
    }
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      if (f.top_k) c.top_k = f.top_k;
      if (sub->count("--min-gap") > 0) c.min_gap_seconds = f.min_gap;
      credmem::run_stage(credmem::stage_from(name), c);
      return 0;
    }
  } catch (const credmem::Error& e) {
    std::cerr << "credmem: " << e.what() << "\n";
    return e.code() == credmem::Errc::ConfigError ? kConfigError : kStageError;
  } catch (const std::exception& e) {
    std::cerr << "credmem: " << e.what() << "\n";
    return kStageError;
  }
  return kStageError;
}
