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
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "credmem/corpus.hpp"
#include "credmem/registry.hpp"
#include "credmem/util.hpp"

namespace credmem {

class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::string id() const = 0;
  virtual std::size_t count(std::string_view text) const = 0;
};

// Identifier runs ([A-Za-z_] or any byte >= 0x80, then also digits), digit
// runs and single punctuation bytes are tokens; whitespace separates.
class CharClassTokenizer final : public Tokenizer {
 public:
  std::string id() const override { return "charclass-v1"; }
  std::size_t count(std::string_view text) const override;
  std::vector<std::string> split(std::string_view text) const;
};

struct ContextFeatures {
  std::size_t line_num = 0;
  std::size_t token_num = 0;
  std::size_t line_num_above = 0;   // lines up to and including the redacted line
  std::size_t token_num_above = 0;  // tokens of the prefix
  std::size_t line_num_below = 0;   // lines after the redacted line
  std::size_t token_num_below = 0;  // tokens of the suffix
  std::string tokenizer_id;

  friend bool operator==(const ContextFeatures&, const ContextFeatures&) = default;
};

// One deletion applied while scrubbing other secrets; offsets refer to the
// text as it was when the deletion happened.
struct Removal {
  enum class Part { Prefix, Suffix };
  Part part = Part::Prefix;
  std::size_t offset = 0;
  std::string text;
  friend bool operator==(const Removal&, const Removal&) = default;
};

struct PromptCase {
  std::string case_id;
  std::string doc_id;
  std::string secret_type_id;
  std::string language;
  std::string prefix;        // text before the redaction point
  std::string suffix;        // from the redacted line's '\n' to the end
  std::string ground_truth;  // the redacted secret
  std::string removed_quote; // opening quote dropped before the secret, if any
  std::string removed_tail;  // rest of the redacted line after the secret
  std::vector<Removal> removals;
  ContextFeatures features;

  std::size_t other_secrets_removed() const noexcept { return removals.size(); }
  friend bool operator==(const PromptCase&, const PromptCase&) = default;
};

// Throws Error{NotFirstOccurrence | Precondition}.
PromptCase build_prompt_case(const CorpusDocument& doc, const SecretOccurrence& occ, const Registry& registry,
                             std::string case_id, const Tokenizer& tokenizer = CharClassTokenizer{});

ContextFeatures compute_context_features(const PromptCase& c, const Tokenizer& tokenizer);

// Undoes the scrubbing and the redaction: the original document bytes.
std::string reconstruct_document(const PromptCase& c);

std::pair<std::string, std::string> render_infill(const PromptCase& c);

struct ChatPrompt {
  std::string text;
  bool has_prefix_clause = true;  // false when the type declares no fixed prefix
};

inline constexpr std::string_view kBlank = "[BLANK]";

// Throws Error{Precondition} when spec does not describe the case.
ChatPrompt render_chat(const PromptCase& c, const SecretTypeSpec& spec);

json to_json(const PromptCase& c);
PromptCase prompt_case_from_json(const json& j);

// Shareable form: no removed text, ground truth replaced by a salted digest.
json to_shareable_json(const PromptCase& c, std::string_view salt);

}  // namespace credmem
