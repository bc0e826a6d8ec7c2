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

// Byte-level kernels used on hot paths of the filter cascade and the corpus
// scanner. Every kernel has a portable scalar reference; wider variants are
// compiled separately and selected at runtime. All variants must agree with
// the scalar reference bit for bit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace credmem::kernels {

// Triviality rules checked by the pattern filter, numbered as reported.
//   1  AAAA       four identical bytes
//   2  ABCD       four ascending adjacent code points within [0-9], [a-z] or [A-Z]
//   3  DCBA       four descending adjacent code points within one of those classes
//   4  XYXYXY     a 2-byte unit repeated three times
//   5  WXYWXYWXY  a 3-byte unit repeated three times
//   6  WXYZWXYZ   a 4-byte unit repeated twice
inline constexpr int kPatternRuleCount = 6;

struct PatternHit {
  int rule = 0;          // 0 when no rule fires
  std::size_t pos = 0;   // start of the first hit of `rule`
  explicit operator bool() const noexcept { return rule != 0; }
  friend bool operator==(const PatternHit&, const PatternHit&) = default;
};

// Lowest-numbered rule that fires anywhere in `s`, with its first position.
using PatternScanFn = PatternHit (*)(std::string_view s);
// Number of '\n' bytes.
using CountNewlinesFn = std::size_t (*)(std::string_view s);
// ASCII-only lower casing; `out` must hold s.size() bytes.
using AsciiLowerFn = void (*)(std::string_view s, char* out);

struct KernelTable {
  const char* name;
  PatternScanFn pattern_scan;
  CountNewlinesFn count_newlines;
  AsciiLowerFn ascii_lower;
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels() noexcept;

// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

// Selected once: the widest supported variant, unless the environment
// variable CREDMEM_KERNELS names another ("scalar", "avx2").
const KernelTable& active() noexcept;

inline PatternHit pattern_scan(std::string_view s) { return active().pattern_scan(s); }
inline std::size_t count_newlines(std::string_view s) { return active().count_newlines(s); }
std::string ascii_lower(std::string_view s);

}  // namespace credmem::kernels
