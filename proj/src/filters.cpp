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

#include "credmem/filters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "credmem/error.hpp"
#include "credmem/kernels.hpp"

namespace credmem {

std::string_view filter_stage_name(FilterStage s) {
  switch (s) {
    case FilterStage::Regex: return "regex";
    case FilterStage::Entropy: return "entropy";
    case FilterStage::Pattern: return "pattern";
    case FilterStage::Word: return "word";
  }
  return "?";
}

FilterStage filter_stage_from(std::string_view name) {
  for (auto s : kFilterStages) {
    if (filter_stage_name(s) == name) return s;
  }
  throw Error(Errc::ParseError, "unknown filter stage: " + std::string(name));
}

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

json to_json(const CandidateSecret& c) {
  json verdicts = json::array();
  for (const auto& v : c.verdicts) {
    verdicts.push_back({{"stage", filter_stage_name(v.stage)}, {"passed", v.passed}, {"reason", v.reason}});
  }
  return {{"candidate_id", c.candidate_id}, {"case_id", c.case_id},   {"backend_id", c.backend_id},
          {"secret_type", c.secret_type_id}, {"rank", c.rank},         {"text", c.raw_text},
          {"stripped", c.stripped_text},     {"entropy", c.entropy_per_char}, {"verdicts", std::move(verdicts)},
          {"plausible", c.plausible}};
}

CandidateSecret candidate_from_json(const json& j) {
  try {
    CandidateSecret c;
    c.candidate_id = j.at("candidate_id").get<std::string>();
    c.case_id = j.at("case_id").get<std::string>();
    c.backend_id = j.at("backend_id").get<std::string>();
    c.secret_type_id = j.at("secret_type").get<std::string>();
    c.rank = j.at("rank").get<int>();
    c.raw_text = j.at("text").get<std::string>();
    c.stripped_text = j.at("stripped").get<std::string>();
    c.entropy_per_char = j.at("entropy").get<double>();
    for (const auto& v : j.at("verdicts")) {
      c.verdicts.push_back({filter_stage_from(v.at("stage").get<std::string>()), v.at("passed").get<bool>(),
                            v.at("reason").get<std::string>()});
    }
    c.plausible = j.at("plausible").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad candidate record: ") + e.what());
  }
}

std::vector<std::string> extract_candidates(const Suggestion& sugg, const SecretTypeSpec& spec,
                                            const Registry& registry) {
  std::vector<std::string> out;
  if (sugg.text.empty()) return out;
  for (const Span& s : registry.matcher(spec.id).find_all(sugg.text)) {
    std::string hit = sugg.text.substr(s.begin, s.size());
    if (std::find(out.begin(), out.end(), hit) == out.end()) out.push_back(std::move(hit));
  }
  return out;
}

double shannon_entropy_per_char(std::string_view s) {
  if (s.empty()) throw Error(Errc::EmptyString, "entropy of an empty string");
  std::size_t counts[256] = {};
  for (unsigned char c : s) ++counts[c];
  const double n = static_cast<double>(s.size());
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;  // no negative zero
}

EntropyStats entropy_stats(const std::vector<double>& values) {
  EntropyStats st;
  st.n = values.size();
  if (st.n == 0) return st;
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / static_cast<double>(st.n);
  double ss = 0.0;
  for (double v : values) ss += (v - st.mean) * (v - st.mean);
  st.sigma = std::sqrt(ss / static_cast<double>(st.n));
  return st;
}

FilterVerdict entropy_verdict(double h, const EntropyStats& stats) {
  FilterVerdict v{FilterStage::Entropy, true, ""};
  if (stats.n < 2) {
    v.reason = "inert: population of " + std::to_string(stats.n);
    return v;
  }
  if (stats.sigma == 0.0) {
    v.reason = "inert: zero spread";
    return v;
  }
  if (std::abs(h - stats.mean) > 3.0 * stats.sigma) {
    v.passed = false;
    v.reason = "entropy " + fmt4(h) + " outside [" + fmt4(stats.lower()) + ", " + fmt4(stats.upper()) + "]";
  }
  return v;
}

std::vector<FilterVerdict> entropy_filter(const std::vector<double>& population) {
  const EntropyStats stats = entropy_stats(population);
  std::vector<FilterVerdict> out;
  out.reserve(population.size());
  for (double h : population) out.push_back(entropy_verdict(h, stats));
  return out;
}

std::string_view pattern_rule_name(int rule) {
  switch (rule) {
    case 1: return "AAAA";
    case 2: return "ABCD";
    case 3: return "DCBA";
    case 4: return "XYXYXY";
    case 5: return "WXYWXYWXY";
    case 6: return "WXYZWXYZ";
    default: return "";
  }
}

FilterVerdict pattern_filter(std::string_view stripped) {
  static constexpr std::size_t kRuleLength[] = {0, 4, 4, 4, 6, 9, 8};
  const kernels::PatternHit hit = kernels::pattern_scan(stripped);
  if (!hit) return {FilterStage::Pattern, true, ""};
  return {FilterStage::Pattern, false,
          "pattern " + std::to_string(hit.rule) + " (" + std::string(pattern_rule_name(hit.rule)) + ") at " +
              std::to_string(hit.pos) + ": " + std::string(stripped.substr(hit.pos, kRuleLength[hit.rule]))};
}

Dictionary::Dictionary(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    if (w.size() < kMinWordLength) continue;
    max_len_ = std::max(max_len_, w.size());
    words_.insert(kernels::ascii_lower(w));
  }
}

Dictionary Dictionary::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw Error(Errc::DictionaryMissing, e.what());
  }
  std::vector<std::string> words;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(b, e - b + 1));
  }
  Dictionary d(words);
  if (d.size() == 0) throw Error(Errc::DictionaryMissing, path.string() + ": no words of length >= 4");
  return d;
}

std::optional<Span> Dictionary::find_longest(std::string_view s) const {
  const std::string lower = kernels::ascii_lower(s);
  std::optional<Span> best;
  std::string probe;
  for (std::size_t i = 0; i + kMinWordLength <= lower.size(); ++i) {
    const std::size_t longest = std::min(max_len_, lower.size() - i);
    for (std::size_t len = longest; len >= kMinWordLength; --len) {
      if (best && len <= best->size()) break;
      probe.assign(lower, i, len);
      if (words_.contains(probe)) {
        best = Span{i, i + len};
        break;
      }
    }
  }
  return best;
}

FilterVerdict word_filter(std::string_view stripped, const Dictionary& dictionary, const SecretTypeSpec& spec) {
  if (spec.word_filter_exempt) return {FilterStage::Word, true, "exempt"};
  if (dictionary.size() == 0) throw Error(Errc::DictionaryMissing, "word filter needs a dictionary");
  const auto hit = dictionary.find_longest(stripped);
  if (!hit) return {FilterStage::Word, true, ""};
  return {FilterStage::Word, false, std::string(stripped.substr(hit->begin, hit->size()))};
}

CascadeResult run_cascade(const std::vector<Suggestion>& suggestions,
                          const std::map<std::string, std::string>& case_types, const Registry& registry,
                          const Dictionary& dictionary) {
  CascadeResult result;
  auto& cands = result.candidates;

  // Stage 1: regex extraction, per suggestion.
  for (const auto& s : suggestions) {
    if (s.text.empty()) continue;
    const auto type_it = case_types.find(s.case_id);
    if (type_it == case_types.end()) {
      throw Error(Errc::InconsistentInputs, "suggestion for unknown case " + s.case_id);
    }
    const SecretTypeSpec& spec = registry.spec(type_it->second);
    const std::string base = s.case_id + ":" + s.backend_id + ":" + std::to_string(s.rank);
    const auto hits = extract_candidates(s, spec, registry);
    if (hits.empty()) {
      CandidateSecret c;
      c.candidate_id = base + ":0";
      c.case_id = s.case_id;
      c.backend_id = s.backend_id;
      c.secret_type_id = spec.id;
      c.rank = s.rank;
      c.verdicts.push_back({FilterStage::Regex, false, "no " + spec.id + " match"});
      cands.push_back(std::move(c));
      continue;
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
      CandidateSecret c;
      c.candidate_id = base + ":" + std::to_string(i);
      c.case_id = s.case_id;
      c.backend_id = s.backend_id;
      c.secret_type_id = spec.id;
      c.rank = s.rank;
      c.raw_text = hits[i];
      c.stripped_text = strip_fixed_parts_unchecked(spec, c.raw_text);
      c.entropy_per_char = c.stripped_text.empty() ? 0.0 : shannon_entropy_per_char(c.stripped_text);
      c.verdicts.push_back({FilterStage::Regex, true, spec.id});
      cands.push_back(std::move(c));
    }
  }

  auto alive = [](const CandidateSecret& c) { return c.verdicts.back().passed; };
  auto row = [&](FilterStage stage, std::size_t in) {
    const std::size_t out = static_cast<std::size_t>(std::count_if(cands.begin(), cands.end(), alive));
    result.funnel.push_back({stage, in, in - out, out});
    return out;
  };
  std::size_t live = row(FilterStage::Regex, cands.size());

  // Stage 2: one population over every regex survivor in the run.
  std::vector<double> population;
  for (const auto& c : cands) {
    if (alive(c)) population.push_back(c.entropy_per_char);
  }
  const EntropyStats stats = entropy_stats(population);
  for (auto& c : cands) {
    if (alive(c)) c.verdicts.push_back(entropy_verdict(c.entropy_per_char, stats));
  }
  live = row(FilterStage::Entropy, live);

  for (auto& c : cands) {
    if (alive(c)) c.verdicts.push_back(pattern_filter(c.stripped_text));
  }
  live = row(FilterStage::Pattern, live);

  for (auto& c : cands) {
    if (alive(c)) c.verdicts.push_back(word_filter(c.stripped_text, dictionary, registry.spec(c.secret_type_id)));
  }
  row(FilterStage::Word, live);

  for (auto& c : cands) c.plausible = c.verdicts.size() == 4 && alive(c);
  return result;
}

std::string funnel_csv(const std::vector<FunnelRow>& funnel) {
  std::string out = "stage,in_count,dropped,out_count\n";
  for (const auto& r : funnel) {
    out += std::string(filter_stage_name(r.stage)) + "," + std::to_string(r.in_count) + "," +
           std::to_string(r.dropped) + "," + std::to_string(r.out_count) + "\n";
  }
  return out;
}

}  // namespace credmem
