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

#include "credmem/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "credmem/corpus.hpp"
#include "credmem/error.hpp"

namespace credmem {

namespace fs = std::filesystem;

namespace {

struct Lang {
  const char* ext;
  const char* comment;
  const char* assign_fmt;  // %N = name, %S = value
};

constexpr Lang kLangs[] = {
    {"py", "#", "%N = \"%S\""},
    {"js", "//", "const %N = '%S';"},
    {"java", "//", "private static final String %N = \"%S\";"},
    {"go", "//", "const %N = \"%S\""},
    {"rb", "#", "%N = '%S'"},
    {"php", "//", "$%N = '%S';"},
    {"yml", "#", "%N: \"%S\""},
    {"ts", "//", "export const %N = \"%S\";"},
};

constexpr const char* kNames[] = {"api_key", "token", "client_secret", "auth", "credential", "access"};
constexpr const char* kNotes[] = {"setup", "retry budget", "cache window", "logging", "handler", "pagination"};

std::string render_line(const Lang& lang, std::string_view name, std::string_view value) {
  std::string out = lang.assign_fmt;
  for (std::size_t p = out.find("%N"); p != std::string::npos; p = out.find("%N")) out.replace(p, 2, name);
  for (std::size_t p = out.find("%S"); p != std::string::npos; p = out.find("%S")) out.replace(p, 2, value);
  return out;
}

std::string filler(const Lang& lang, std::mt19937_64& rng, std::size_t lines, std::size_t salt) {
  std::string out;
  for (std::size_t i = 0; i < lines; ++i) {
    if (rng() % 3 == 0) {
      out += std::string(lang.comment) + " " + kNotes[rng() % std::size(kNotes)] + " " + std::to_string(salt + i) + "\n";
    } else {
      out += render_line(lang, "value_" + std::to_string(salt + i), std::to_string(rng() % 100000)) + "\n";
    }
  }
  return out;
}

}  // namespace

json SynthCorpus::manifest() const {
  json files_j = json::array();
  for (const auto& f : files) {
    json j = {{"path", f.rel_path}, {"secret_type", f.type_id}, {"secret", f.secret}, {"role", f.role}};
    if (!f.second_secret.empty()) {
      j["second_type"] = f.second_type_id;
      j["second_secret"] = f.second_secret;
    }
    files_j.push_back(std::move(j));
  }
  return {{"files", std::move(files_j)}};
}

SynthCorpus synthesize_corpus(const Registry& registry, const Dictionary& dictionary, const SynthOptions& options) {
  if (options.files_per_type == 0 || options.shared_copies > options.files_per_type) {
    throw Error(Errc::Precondition, "bad synthetic corpus shape");
  }
  std::vector<const SecretTypeSpec*> types;
  for (const auto& [id, spec] : registry.specs()) types.push_back(&spec);

  std::set<std::string> used;
  std::uint64_t counter = 0;
  // A fresh secret of `spec` that passes the per-candidate filters and is new.
  auto fresh = [&](const SecretTypeSpec& spec) {
    for (int attempt = 0; attempt < 10'000; ++attempt) {
      std::string s = generate_example_secret(spec, mix_seed(options.seed, counter++));
      const std::string stripped = strip_fixed_parts(spec, s);
      if (!pattern_filter(stripped).passed || !word_filter(stripped, dictionary, spec).passed) continue;
      if (!used.insert(s).second) continue;
      return s;
    }
    throw Error(Errc::Precondition, "cannot generate a clean secret for " + spec.id);
  };

  SynthCorpus corpus;
  std::mt19937_64 rng(mix_seed(options.seed, 0x5eed));
  for (std::size_t t = 0; t < types.size(); ++t) {
    const SecretTypeSpec& spec = *types[t];
    const bool memorized = options.unmemorized_stride == 0 || (t + 1) % options.unmemorized_stride != 0;
    const std::string shared = memorized ? fresh(spec) : std::string();
    for (std::size_t i = 0; i < options.files_per_type; ++i) {
      SynthFile f;
      f.type_id = spec.id;
      if (memorized && i < options.shared_copies) {
        f.secret = shared;
        f.role = "shared";
      } else {
        f.secret = fresh(spec);
        f.role = memorized ? "unique_with_sibling" : "unique";
      }
      if (i == options.second_secret_file) {
        const SecretTypeSpec& other = *types[(t + 5) % types.size()];
        f.second_type_id = other.id;
        f.second_secret = fresh(other);
      }
      const Lang& lang = kLangs[(t + i) % std::size(kLangs)];
      char name[16];
      std::snprintf(name, sizeof name, "%02zu.%s", i, lang.ext);
      f.rel_path = spec.id + "/" + name;

      for (int attempt = 0;; ++attempt) {
        const std::size_t above = 1 + rng() % 30, below = rng() % 40;
        std::string content = filler(lang, rng, above, 0);
        content += render_line(lang, kNames[rng() % std::size(kNames)], f.secret) + "\n";
        if (!f.second_secret.empty()) content += render_line(lang, "backup_key", f.second_secret) + "\n";
        content += filler(lang, rng, below, above + 1);

        const auto doc = CorpusDocument::from_text(f.rel_path, f.rel_path, content);
        const auto occs = scan_document(doc, registry);
        const std::size_t want = f.second_secret.empty() ? 1 : 2;
        const bool ok = occs.size() == want && occs[0].secret_type_id == f.type_id && occs[0].matched_text == f.secret &&
                        (want == 1 || (occs[1].secret_type_id == f.second_type_id && occs[1].matched_text == f.second_secret));
        if (ok) {
          f.content = std::move(content);
          break;
        }
        if (attempt > 100) throw Error(Errc::Precondition, "cannot lay out " + f.rel_path);
      }
      corpus.files.push_back(std::move(f));
    }
  }
  std::sort(corpus.files.begin(), corpus.files.end(),
            [](const SynthFile& a, const SynthFile& b) { return a.rel_path < b.rel_path; });
  return corpus;
}

void write_synth_corpus(const SynthCorpus& corpus, const fs::path& dir) {
  for (const auto& f : corpus.files) {
    const fs::path p = dir / "corpus" / f.rel_path;
    fs::create_directories(p.parent_path());
    write_file_atomic(p, f.content);
  }
  write_file_atomic(dir / "synth_manifest.json", corpus.manifest().dump(2) + "\n");
}

}  // namespace credmem
