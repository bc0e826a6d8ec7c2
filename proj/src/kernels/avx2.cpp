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

// AVX2 variants. This translation unit is the only one compiled with -mavx2;
// callers reach it through the dispatch table after a CPU feature check.

#include <immintrin.h>

#include <array>
#include <bit>
#include <cstring>
#include <vector>

#include "kernels_internal.hpp"

namespace credmem::kernels::detail {
namespace {

// Unsigned (x - lo) <= (hi - lo), lane-wise, as a 0x00/0xFF mask.
inline __m256i in_range(__m256i x, char lo, char hi) {
  const __m256i t = _mm256_sub_epi8(x, _mm256_set1_epi8(lo));
  const __m256i bound = _mm256_set1_epi8(char(hi - lo));
  return _mm256_cmpeq_epi8(_mm256_min_epu8(t, bound), t);
}

// 1 for digits, 2 for upper case, 3 for lower case, 0 otherwise.
inline __m256i char_class(__m256i x) {
  const __m256i digit = _mm256_and_si256(in_range(x, '0', '9'), _mm256_set1_epi8(1));
  const __m256i upper = _mm256_and_si256(in_range(x, 'A', 'Z'), _mm256_set1_epi8(2));
  const __m256i lower = _mm256_and_si256(in_range(x, 'a', 'z'), _mm256_set1_epi8(3));
  return _mm256_or_si256(digit, _mm256_or_si256(upper, lower));
}

inline __m256i eq(__m256i a, __m256i b) { return _mm256_cmpeq_epi8(a, b); }
inline __m256i both(__m256i a, __m256i b) { return _mm256_and_si256(a, b); }

inline std::uint32_t valid_lanes(std::size_t base, std::size_t n, std::size_t len) {
  if (base + len > n) return 0;
  const std::size_t count = n - len - base + 1;
  return count >= 32 ? 0xFFFFFFFFu : ((1u << count) - 1u);
}

inline std::uint32_t bits(__m256i m) { return static_cast<std::uint32_t>(_mm256_movemask_epi8(m)); }

PatternHit pattern_scan_avx2(std::string_view s) {
  const std::size_t n = s.size();
  if (n < 4) return {};

  // Zero-padded copy so the shifted loads at offsets up to +8 stay in bounds.
  constexpr std::size_t kPad = 64;
  std::array<unsigned char, 512> small{};
  std::vector<unsigned char> large;
  unsigned char* buf = small.data();
  if (n + kPad > small.size()) {
    large.assign(n + kPad, 0);
    buf = large.data();
  }
  std::memcpy(buf, s.data(), n);

  constexpr std::size_t kNone = ~std::size_t{0};
  std::array<std::size_t, kPatternRuleCount + 1> first;
  first.fill(kNone);

  const __m256i one = _mm256_set1_epi8(1);
  const __m256i zero = _mm256_setzero_si256();

  for (std::size_t base = 0; base + 4 <= n; base += 32) {
    __m256i v[9];
    for (std::size_t k = 0; k < 9; ++k) {
      v[k] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(buf + base + k));
    }

    std::array<std::uint32_t, kPatternRuleCount + 1> mask{};
    mask[1] = bits(both(eq(v[0], v[1]), both(eq(v[1], v[2]), eq(v[2], v[3])))) &
              valid_lanes(base, n, 4);

    const __m256i cls0 = char_class(v[0]);
    const __m256i same_class =
        _mm256_andnot_si256(eq(cls0, zero), eq(cls0, char_class(v[3])));
    const __m256i up = both(eq(_mm256_sub_epi8(v[1], v[0]), one),
                            both(eq(_mm256_sub_epi8(v[2], v[1]), one),
                                 eq(_mm256_sub_epi8(v[3], v[2]), one)));
    const __m256i down = both(eq(_mm256_sub_epi8(v[0], v[1]), one),
                              both(eq(_mm256_sub_epi8(v[1], v[2]), one),
                                   eq(_mm256_sub_epi8(v[2], v[3]), one)));
    mask[2] = bits(both(up, same_class)) & valid_lanes(base, n, 4);
    mask[3] = bits(both(down, same_class)) & valid_lanes(base, n, 4);

    mask[4] = bits(both(both(eq(v[2], v[0]), eq(v[3], v[1])), both(eq(v[4], v[2]), eq(v[5], v[3])))) &
              valid_lanes(base, n, 6);

    __m256i period3 = eq(v[3], v[0]);
    for (std::size_t k = 4; k <= 8; ++k) period3 = both(period3, eq(v[k], v[k - 3]));
    mask[5] = bits(period3) & valid_lanes(base, n, 9);

    mask[6] = bits(both(both(eq(v[4], v[0]), eq(v[5], v[1])), both(eq(v[6], v[2]), eq(v[7], v[3])))) &
              valid_lanes(base, n, 8);

    for (int rule = 1; rule <= kPatternRuleCount; ++rule) {
      if (first[rule] == kNone && mask[rule] != 0) {
        first[rule] = base + static_cast<std::size_t>(std::countr_zero(mask[rule]));
      }
    }
    if (first[1] != kNone) break;  // nothing can outrank rule 1
  }

  for (int rule = 1; rule <= kPatternRuleCount; ++rule) {
    if (first[rule] != kNone) return {rule, first[rule]};
  }
  return {};
}

std::size_t count_newlines_avx2(std::string_view s) {
  const char* p = s.data();
  const std::size_t n = s.size();
  const __m256i nl = _mm256_set1_epi8('\n');
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    count += static_cast<std::size_t>(std::popcount(bits(_mm256_cmpeq_epi8(v, nl))));
  }
  for (; i < n; ++i) count += p[i] == '\n';
  return count;
}

void ascii_lower_avx2(std::string_view s, char* out) {
  const char* p = s.data();
  const std::size_t n = s.size();
  const __m256i flip = _mm256_set1_epi8(0x20);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const __m256i upper = in_range(v, 'A', 'Z');
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_or_si256(v, _mm256_and_si256(upper, flip)));
  }
  for (; i < n; ++i) {
    const char c = p[i];
    out[i] = (c >= 'A' && c <= 'Z') ? char(c + ('a' - 'A')) : c;
  }
}

constexpr KernelTable kAvx2{"avx2", &pattern_scan_avx2, &count_newlines_avx2, &ascii_lower_avx2};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace credmem::kernels::detail
