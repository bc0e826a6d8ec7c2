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
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "credmem/rational.hpp"
#include "credmem/registry.hpp"
#include "credmem/util.hpp"

namespace credmem {

struct CorpusDocument {
  std::string doc_id;
  std::filesystem::path path;
  std::string language;
  std::string content;
  std::size_t line_count = 0;

  static CorpusDocument from_text(std::string doc_id, std::filesystem::path path, std::string content);
};

// Newline-delimited line count: a final line without '\n' still counts.
std::size_t count_lines(std::string_view text);

// Language tag from the file extension alone ("unknown" when unmapped).
std::string language_for(const std::filesystem::path& path);

struct SecretOccurrence {
  std::string doc_id;
  std::string secret_type_id;
  Span byte_span;
  std::size_t line_index = 0;
  std::string matched_text;
  bool is_first_in_doc = false;

  friend bool operator==(const SecretOccurrence&, const SecretOccurrence&) = default;
};

json to_json(const SecretOccurrence& occ);
SecretOccurrence occurrence_from_json(const json& j);

struct ScanOptions {
  // Hits on lines longer than this (minified blobs) are ignored.
  std::size_t max_line_length = 4096;
  // Worker threads for corpus-level scans; 0 means hardware concurrency.
  unsigned threads = 1;
};

struct CorpusOptions {
  // Lower-case extensions with the dot; empty accepts every file.
  std::set<std::string> extensions;
};

// Walks `root` recursively (or reads a JSONL manifest of {doc_id, path}).
// Files containing NUL bytes are skipped with a warning on stderr. Output is
// sorted by doc_id. Throws Error{Io | ParseError}.
std::vector<CorpusDocument> load_corpus(const std::filesystem::path& root, const CorpusOptions& options = {});

// Digest over (doc_id, content) pairs in order.
std::string corpus_digest(const std::vector<CorpusDocument>& docs);

// All non-overlapping boundary-respecting hits of every spec, by position.
// Overlaps resolve to the longer hit, then the earlier start, then the
// smaller type id.
std::vector<SecretOccurrence> scan_document(const CorpusDocument& doc, const Registry& registry,
                                            const ScanOptions& options = {});

// scan_document over every document, concatenated in document order.
std::vector<SecretOccurrence> scan_corpus(const std::vector<CorpusDocument>& docs, const Registry& registry,
                                          const ScanOptions& options = {});

// First occurrences of documents whose first secret is of `type_id`, in
// corpus order, from at most `limit` documents. Throws Error{Precondition}
// when limit is 0.
std::vector<SecretOccurrence> collect_candidates(const std::vector<CorpusDocument>& docs,
                                                 std::string_view type_id, const Registry& registry,
                                                 std::size_t limit, const ScanOptions& options = {});

// Seeded uniform sample without replacement, sorted by (doc_id, start).
std::vector<SecretOccurrence> sample_occurrences(const std::vector<SecretOccurrence>& occs, std::size_t n,
                                                 std::uint64_t seed);

enum class OccurrenceLabel { TruePositive, FalsePositive };
using OccurrenceKey = std::pair<std::string, std::size_t>;  // (doc_id, start)

inline OccurrenceKey key_of(const SecretOccurrence& o) { return {o.doc_id, o.byte_span.begin}; }

// TP / (TP + FP). Throws Error{EmptySample | Precondition}.
Rational estimate_precision(const std::vector<SecretOccurrence>& occs,
                            const std::map<OccurrenceKey, OccurrenceLabel>& labels);

}  // namespace credmem
