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

#include "kernels_internal.hpp"

namespace credmem::kernels::detail {
namespace {

inline int char_class(unsigned char c) {
  if (c >= '0' && c <= '9') return 1;
  if (c >= 'A' && c <= 'Z') return 2;
  if (c >= 'a' && c <= 'z') return 3;
  return 0;
}

bool rule_at(const unsigned char* p, std::size_t n, std::size_t i, int rule) {
  switch (rule) {
    case 1:
      return i + 4 <= n && p[i] == p[i + 1] && p[i + 1] == p[i + 2] && p[i + 2] == p[i + 3];
    case 2:
    case 3: {
      if (i + 4 > n) return false;
      const int step = rule == 2 ? 1 : -1;
      const int cls = char_class(p[i]);
      if (cls == 0) return false;
      for (std::size_t k = 1; k < 4; ++k) {
        if (char_class(p[i + k]) != cls) return false;
        if (int(p[i + k]) - int(p[i + k - 1]) != step) return false;
      }
      return true;
    }
    case 4:
    case 5:
    case 6: {
      const std::size_t unit = rule == 4 ? 2 : rule == 5 ? 3 : 4;
      const std::size_t reps = rule == 6 ? 2 : 3;
      const std::size_t len = unit * reps;
      if (i + len > n) return false;
      for (std::size_t k = unit; k < len; ++k) {
        if (p[i + k] != p[i + k - unit]) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

PatternHit pattern_scan_scalar(std::string_view s) {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  const std::size_t n = s.size();
  for (int rule = 1; rule <= kPatternRuleCount; ++rule) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rule_at(p, n, i, rule)) return {rule, i};
    }
  }
  return {};
}

std::size_t count_newlines_scalar(std::string_view s) {
  std::size_t count = 0;
  for (char c : s) count += c == '\n';
  return count;
}

void ascii_lower_scalar(std::string_view s, char* out) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    out[i] = (c >= 'A' && c <= 'Z') ? char(c + ('a' - 'A')) : c;
  }
}

constexpr KernelTable kScalar{"scalar", &pattern_scan_scalar, &count_newlines_scalar,
                              &ascii_lower_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace credmem::kernels::detail
