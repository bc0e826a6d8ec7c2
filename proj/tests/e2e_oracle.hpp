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

// Analytic expectation for an e2e run of the mock memorizer over a corpus
// produced by the synthesizer. Works from the synth manifest (roles, planted
// texts) and re-derives the mock's choices and the plausibility filters
// with std::regex and the brute-force oracles, not with the library's
// matcher, cascade or classifier.

#pragma once

#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <stdexcept>

#include "credmem/registry.hpp"
#include "credmem/util.hpp"
#include "oracles.hpp"

namespace credmem::oracle {

struct E2eExpectation {
  std::size_t ts = 0, ps = 0, ms = 0, sms = 0, wms = 0;
};

inline std::string strip_parts(const SecretTypeSpec& spec, const std::string& s) {
  std::vector<bool> drop(s.size(), false);
  for (const auto& p : spec.fixed_parts) {
    std::size_t at = 0;
    if (p.anchor == FixedPart::Anchor::Infix) at = p.offset;
    if (p.anchor == FixedPart::Anchor::Suffix) {
      if (p.text.size() > s.size()) continue;
      at = s.size() - p.text.size();
    }
    if (at + p.text.size() > s.size() || s.compare(at, p.text.size(), p.text) != 0) continue;
    for (std::size_t i = 0; i < p.text.size(); ++i) drop[at + i] = true;
  }
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!drop[i]) out += s[i];
  }
  return out;
}

inline std::vector<std::string> long_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> words;
  for (std::string w; in >> w;) {
    if (w[0] == '#' || w.size() < 4) continue;
    for (auto& ch : w) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    words.push_back(w);
  }
  return words;
}

// `seed` is the run seed handed to e2e; `per_type` must cover every file.
inline E2eExpectation expect_e2e(const json& synth_manifest, const Registry& registry,
                                 const std::vector<std::string>& words, std::uint64_t seed, std::size_t threshold,
                                 std::size_t per_type) {
  std::map<std::string, std::size_t> count;
  std::map<std::string, std::string> type_of;
  std::map<std::string, std::vector<std::string>> files_of_type;  // ground truths, file order
  for (const auto& f : synth_manifest.at("files")) {
    const std::string t = f.at("secret_type"), s = f.at("secret");
    ++count[s];
    type_of[s] = t;
    files_of_type[t].push_back(s);
    if (f.contains("second_secret")) {
      ++count[f.at("second_secret").get<std::string>()];
      type_of[f.at("second_secret")] = f.at("second_type");
    }
  }

  struct Row {
    std::string type, truth, suggestion;
  };
  std::vector<Row> rows;
  for (const auto& [type, truths] : files_of_type) {
    if (truths.size() > per_type) throw std::logic_error("oracle needs per_type >= files per type");
    std::vector<std::string> distractor_cases;
    for (std::size_t i = 0; i < truths.size(); ++i) {
      const std::string& gt = truths[i];
      std::string pick;
      if (count[gt] >= threshold) {
        pick = gt;
      } else {
        std::size_t best = 0;
        for (const auto& [text, n] : count) {
          if (type_of[text] == type && n >= threshold && (n > best || (n == best && text < pick))) {
            pick = text;
            best = n;
          }
        }
      }
      rows.push_back({type, gt, pick});
      if (pick.empty()) distractor_cases.push_back(gt);
    }
    // Distractors are keyed by case id, and every file of the type is a case,
    // so the set of distractor texts is the same whatever the sampling order.
    if (!distractor_cases.empty()) {
      if (distractor_cases.size() != truths.size()) throw std::logic_error("mixed distractor type");
      for (std::size_t i = 0; i < truths.size(); ++i) {
        char id[16];
        std::snprintf(id, sizeof id, "-%04zu", i + 1);
        rows[rows.size() - truths.size() + i].suggestion =
            generate_example_secret(registry.spec(type), mix_seed(seed, fnv1a64(type + id)));
      }
    }
  }

  // Regex stage, then one entropy population over the survivors.
  std::vector<std::pair<std::size_t, std::string>> survivors;  // row, stripped
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& spec = registry.spec(rows[i].type);
    if (std::regex_match(rows[i].suggestion, std::regex(spec.core_pattern))) {
      survivors.emplace_back(i, strip_parts(spec, rows[i].suggestion));
    }
  }
  std::vector<double> h;
  for (const auto& [i, s] : survivors) h.push_back(s.empty() ? 0.0 : entropy_bits(s));
  double mean = 0, var = 0;
  for (double x : h) mean += x;
  mean /= static_cast<double>(h.size());
  for (double x : h) var += (x - mean) * (x - mean);
  const double sigma = std::sqrt(var / static_cast<double>(h.size()));

  E2eExpectation e;
  e.ts = rows.size();
  std::set<std::size_t> plausible;
  for (std::size_t k = 0; k < survivors.size(); ++k) {
    const auto& [i, stripped] = survivors[k];
    if (h.size() >= 2 && sigma > 0 && std::fabs(h[k] - mean) > 3 * sigma) continue;
    if (pattern_rules(stripped).first != 0) continue;
    if (!registry.spec(rows[i].type).word_filter_exempt) {
      std::string lower = stripped;
      for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      bool hit = false;
      for (const auto& w : words) hit = hit || lower.find(w) != std::string::npos;
      if (hit) continue;
    }
    plausible.insert(i);
  }
  for (std::size_t i : plausible) {
    ++e.ps;
    if (rows[i].suggestion == rows[i].truth) {
      ++e.sms;
    } else if (count.count(rows[i].suggestion) != 0) {
      ++e.wms;
    }
  }
  e.ms = e.sms + e.wms;
  return e;
}

}  // namespace credmem::oracle
