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

#include "credmem/corpus.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <thread>

#include "credmem/error.hpp"
#include "credmem/kernels.hpp"
#include "credmem/pattern.hpp"

namespace credmem {
namespace fs = std::filesystem;

std::size_t count_lines(std::string_view text) {
  if (text.empty()) return 0;
  return kernels::count_newlines(text) + (text.back() == '\n' ? 0 : 1);
}

std::string language_for(const fs::path& path) {
  static const std::map<std::string, std::string> kByExt = {
      {".js", "JavaScript"}, {".mjs", "JavaScript"}, {".jsx", "JavaScript"}, {".ts", "TypeScript"},
      {".tsx", "TypeScript"}, {".py", "Python"},     {".php", "PHP"},        {".java", "Java"},
      {".go", "Go"},         {".html", "HTML"},      {".htm", "HTML"},       {".rb", "Ruby"},
      {".cpp", "C++"},       {".cc", "C++"},         {".cxx", "C++"},        {".hpp", "C++"},
      {".h", "C"},           {".c", "C"},            {".cs", "C#"},          {".kt", "Kotlin"},
      {".swift", "Swift"},   {".rs", "Rust"},        {".sh", "Shell"},       {".yml", "YAML"},
      {".yaml", "YAML"},     {".json", "JSON"},      {".env", "Dotenv"},
  };
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  const auto it = kByExt.find(ext);
  return it == kByExt.end() ? "unknown" : it->second;
}

CorpusDocument CorpusDocument::from_text(std::string doc_id, fs::path path, std::string content) {
  CorpusDocument d;
  d.doc_id = std::move(doc_id);
  d.language = language_for(path);
  d.path = std::move(path);
  d.line_count = count_lines(content);
  d.content = std::move(content);
  return d;
}

json to_json(const SecretOccurrence& occ) {
  return json{{"doc_id", occ.doc_id},
              {"secret_type", occ.secret_type_id},
              {"start", occ.byte_span.begin},
              {"end", occ.byte_span.end},
              {"line", occ.line_index},
              {"text", occ.matched_text},
              {"first", occ.is_first_in_doc}};
}

SecretOccurrence occurrence_from_json(const json& j) {
  try {
    SecretOccurrence o;
    o.doc_id = j.at("doc_id").get<std::string>();
    o.secret_type_id = j.at("secret_type").get<std::string>();
    o.byte_span = {j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>()};
    o.line_index = j.at("line").get<std::size_t>();
    o.matched_text = j.at("text").get<std::string>();
    o.is_first_in_doc = j.at("first").get<bool>();
    return o;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("occurrence record: ") + e.what());
  }
}

namespace {

bool accepted(const fs::path& p, const CorpusOptions& options) {
  if (options.extensions.empty()) return true;
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return options.extensions.contains(ext);
}

std::optional<CorpusDocument> read_document(std::string doc_id, const fs::path& path) {
  std::string content = read_file(path);
  if (content.find('\0') != std::string::npos) {
    std::cerr << "warning: skipping binary file " << path.string() << "\n";
    return std::nullopt;
  }
  return CorpusDocument::from_text(std::move(doc_id), path, std::move(content));
}

}  // namespace

std::vector<CorpusDocument> load_corpus(const fs::path& root, const CorpusOptions& options) {
  std::vector<CorpusDocument> docs;
  std::error_code ec;
  if (fs::is_directory(root, ec)) {
    for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied);
         it != fs::recursive_directory_iterator(); ++it) {
      if (!it->is_regular_file() || !accepted(it->path(), options)) continue;
      const std::string id = fs::relative(it->path(), root).generic_string();
      if (auto doc = read_document(id, it->path())) docs.push_back(std::move(*doc));
    }
  } else if (fs::is_regular_file(root, ec)) {
    const fs::path base = root.parent_path();
    std::set<std::string> seen;
    for_each_jsonl(root, [&](const json& j) {
      if (!j.contains("doc_id") || !j.contains("path")) {
        throw Error(Errc::ParseError, root.string() + ": manifest record needs doc_id and path");
      }
      const auto id = j["doc_id"].get<std::string>();
      if (!seen.insert(id).second) throw Error(Errc::ParseError, root.string() + ": duplicate doc_id " + id);
      fs::path p = j["path"].get<std::string>();
      if (p.is_relative()) p = base / p;
      if (!accepted(p, options)) return;
      if (auto doc = read_document(id, p)) docs.push_back(std::move(*doc));
    });
  } else {
    throw Error(Errc::Io, "corpus not found: " + root.string());
  }
  std::sort(docs.begin(), docs.end(), [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
  return docs;
}

std::string corpus_digest(const std::vector<CorpusDocument>& docs) {
  std::string acc;
  for (const auto& d : docs) {
    acc += d.doc_id;
    acc.push_back('\0');
    acc += sha256_hex(d.content);
    acc.push_back('\n');
  }
  return sha256_hex(acc);
}

std::vector<SecretOccurrence> scan_document(const CorpusDocument& doc, const Registry& registry,
                                            const ScanOptions& options) {
  const std::string_view text = doc.content;

  // line_starts[k] = byte offset of line k
  std::vector<std::size_t> line_starts{0};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') line_starts.push_back(i + 1);
  }
  auto line_of = [&](std::size_t pos) {
    return static_cast<std::size_t>(std::upper_bound(line_starts.begin(), line_starts.end(), pos) -
                                    line_starts.begin()) - 1;
  };
  auto line_length = [&](std::size_t line) {
    const std::size_t begin = line_starts[line];
    const std::size_t end = line + 1 < line_starts.size() ? line_starts[line + 1] - 1 : text.size();
    return end - begin;
  };

  struct Hit {
    Span span;
    const std::string* type;
  };
  std::vector<Hit> hits;
  for (const auto& [id, spec] : registry.specs()) {
    for (const Span& s : registry.matcher(id).find_all(text)) {
      if (line_length(line_of(s.begin)) > options.max_line_length) continue;
      hits.push_back({s, &spec.id});
    }
  }

  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.span.size() != b.span.size()) return a.span.size() > b.span.size();
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    return *a.type < *b.type;
  });
  // Greedy interval selection; `taken` maps begin -> hit, kept disjoint.
  std::map<std::size_t, Hit> taken;
  for (const Hit& h : hits) {
    auto next = taken.lower_bound(h.span.begin);
    if (next != taken.end() && next->second.span.begin < h.span.end) continue;
    if (next != taken.begin() && std::prev(next)->second.span.end > h.span.begin) continue;
    taken.emplace(h.span.begin, h);
  }
  std::vector<Hit> chosen;
  chosen.reserve(taken.size());
  for (const auto& [begin, h] : taken) chosen.push_back(h);

  std::vector<SecretOccurrence> out;
  out.reserve(chosen.size());
  for (const Hit& h : chosen) {
    SecretOccurrence o;
    o.doc_id = doc.doc_id;
    o.secret_type_id = *h.type;
    o.byte_span = h.span;
    o.line_index = line_of(h.span.begin);
    o.matched_text = std::string(text.substr(h.span.begin, h.span.size()));
    o.is_first_in_doc = out.empty();
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<SecretOccurrence> scan_corpus(const std::vector<CorpusDocument>& docs, const Registry& registry,
                                          const ScanOptions& options) {
  std::vector<std::vector<SecretOccurrence>> per_doc(docs.size());
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, docs.size())));

  if (threads <= 1) {
    for (std::size_t i = 0; i < docs.size(); ++i) per_doc[i] = scan_document(docs[i], registry, options);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < docs.size(); i += threads) per_doc[i] = scan_document(docs[i], registry, options);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<SecretOccurrence> out;
  for (auto& v : per_doc) {
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  }
  return out;
}

std::vector<SecretOccurrence> collect_candidates(const std::vector<CorpusDocument>& docs,
                                                 std::string_view type_id, const Registry& registry,
                                                 std::size_t limit, const ScanOptions& options) {
  if (limit == 0) throw Error(Errc::Precondition, "collect_candidates: limit must be positive");
  std::vector<SecretOccurrence> out;
  for (const auto& doc : docs) {
    if (out.size() >= limit) break;
    auto occs = scan_document(doc, registry, options);
    if (!occs.empty() && occs.front().secret_type_id == type_id) out.push_back(std::move(occs.front()));
  }
  return out;
}

std::vector<SecretOccurrence> sample_occurrences(const std::vector<SecretOccurrence>& occs, std::size_t n,
                                                 std::uint64_t seed) {
  std::vector<std::size_t> idx(occs.size());
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t take = std::min(n, occs.size());
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<SecretOccurrence> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(occs[idx[i]]);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.doc_id, a.byte_span.begin) < std::tie(b.doc_id, b.byte_span.begin);
  });
  return out;
}

Rational estimate_precision(const std::vector<SecretOccurrence>& occs,
                            const std::map<OccurrenceKey, OccurrenceLabel>& labels) {
  if (occs.empty()) throw Error(Errc::EmptySample, "no labeled occurrences");
  std::int64_t tp = 0;
  for (const auto& o : occs) {
    const auto it = labels.find(key_of(o));
    if (it == labels.end()) {
      throw Error(Errc::Precondition, "unlabeled occurrence " + o.doc_id + "@" + std::to_string(o.byte_span.begin));
    }
    tp += it->second == OccurrenceLabel::TruePositive;
  }
  return {tp, static_cast<std::int64_t>(occs.size())};
}

}  // namespace credmem
