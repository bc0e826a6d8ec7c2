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

// Independent reference implementations used only by tests. Nothing here
// calls into the library code paths it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace credmem::oracle {

inline bool same_class_run(std::string_view t) {
  auto cls = [](char c) {
    if (c >= '0' && c <= '9') return 1;
    if (c >= 'a' && c <= 'z') return 2;
    if (c >= 'A' && c <= 'Z') return 3;
    return 0;
  };
  const int c0 = cls(t[0]);
  if (c0 == 0) return false;
  return std::all_of(t.begin(), t.end(), [&](char c) { return cls(c) == c0; });
}

// Does the whole of `t` have the shape of rule `rule`?
inline bool is_shape(std::string_view t, int rule) {
  switch (rule) {
    case 1:
      return t.size() == 4 && t[0] == t[1] && t[0] == t[2] && t[0] == t[3];
    case 2:
      return t.size() == 4 && same_class_run(t) && t[1] == t[0] + 1 && t[2] == t[0] + 2 && t[3] == t[0] + 3;
    case 3:
      return t.size() == 4 && same_class_run(t) && t[1] == t[0] - 1 && t[2] == t[0] - 2 && t[3] == t[0] - 3;
    case 4:
      return t.size() == 6 && t.substr(0, 2) == t.substr(2, 2) && t.substr(0, 2) == t.substr(4, 2);
    case 5:
      return t.size() == 9 && t.substr(0, 3) == t.substr(3, 3) && t.substr(0, 3) == t.substr(6, 3);
    case 6:
      return t.size() == 8 && t.substr(0, 4) == t.substr(4, 4);
    default:
      return false;
  }
}

// Enumerates every substring and tests every rule. Returns the lowest rule
// that fires anywhere (0 if none) and its first start.
inline std::pair<int, std::size_t> pattern_rules(std::string_view s) {
  for (int rule = 1; rule <= 6; ++rule) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t len = 1; i + len <= s.size(); ++len) {
        if (is_shape(s.substr(i, len), rule)) return {rule, i};
      }
    }
  }
  return {0, 0};
}

// Entropy per character from a sorted frequency map.
inline double entropy_bits(std::string_view s) {
  std::map<char, double> freq;
  for (char c : s) freq[c] += 1.0;
  double h = 0.0;
  for (const auto& [c, n] : freq) {
    const double p = n / static_cast<double>(s.size());
    h -= p * std::log2(p);
  }
  return h;
}

// Mann–Whitney by brute force: average ranks over the pooled sample, then
// enumerate every way of choosing |a| of the pooled positions.
struct MwuBrute {
  double u_a;
  double p_less;
  double p_greater;
};

inline MwuBrute mann_whitney_brute(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::size_t n = pooled.size();
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    double less = 0, equal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (pooled[j] < pooled[i]) less += 1;
      if (pooled[j] == pooled[i]) equal += 1;
    }
    rank[i] = less + (equal + 1) / 2.0;
  }
  const std::size_t na = a.size();
  auto u_of = [&](std::uint32_t mask) {
    double r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) r += rank[i];
    }
    return r - double(na) * double(na + 1) / 2.0;
  };
  const std::uint32_t observed = (1u << na) - 1u;
  const double u_obs = u_of(observed);
  double total = 0, le = 0, ge = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
    const double u = u_of(mask);
    total += 1;
    if (u <= u_obs + 1e-9) le += 1;
    if (u >= u_obs - 1e-9) ge += 1;
  }
  return {u_obs, le / total, ge / total};
}

}  // namespace credmem::oracle
