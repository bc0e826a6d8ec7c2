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

// Seeded synthetic corpus with a planted duplication profile.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "credmem/filters.hpp"
#include "credmem/registry.hpp"
#include "credmem/util.hpp"

namespace credmem {

struct SynthOptions {
  std::uint64_t seed = 7;
  std::size_t files_per_type = 10;
  // Memorized types put one shared secret into this many files.
  std::size_t shared_copies = 4;
  // Every `unmemorized_stride`-th type (by registry order, 1-based) gets only unique secrets.
  std::size_t unmemorized_stride = 3;
  // File index (per type) that also carries a secret of another type.
  std::size_t second_secret_file = 7;
};

struct SynthFile {
  std::string rel_path;
  std::string type_id;
  std::string secret;
  std::string role;  // shared | unique_with_sibling | unique
  std::string second_type_id;
  std::string second_secret;
  std::string content;
};

struct SynthCorpus {
  std::vector<SynthFile> files;  // sorted by rel_path
  json manifest() const;         // everything but the file contents
};

// Throws Error{Precondition} if a conforming layout cannot be produced.
SynthCorpus synthesize_corpus(const Registry& registry, const Dictionary& dictionary, const SynthOptions& options);

// Writes the files plus synth_manifest.json under `dir`.
void write_synth_corpus(const SynthCorpus& corpus, const std::filesystem::path& dir);

}  // namespace credmem
