// Copyright 2026 The simt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "simt/types.hpp"

namespace simt {

// One step of translation: the next target word, or the end marker.
struct NextWord {
  std::string word;
  bool end_of_translation = false;

  static NextWord end() { return NextWord{"", true}; }
  static NextWord of(std::string w) { return NextWord{std::move(w), false}; }
};

// Produces the next target word from the instruction, the source words read
// so far and the translation generated so far. A returned word never
// contains whitespace. Implementations must tolerate concurrent calls from
// independent sessions.
class TranslationAgent {
 public:
  virtual ~TranslationAgent() = default;

  virtual NextWord next_word(const std::string& instruction,
                             const std::vector<std::string>& source_prefix,
                             const std::vector<std::string>& target_prefix) = 0;
};

// Prompt text with {instruction}, {source} and {target_prefix} placeholders,
// each required exactly once.
class PromptTemplate {
 public:
  static PromptTemplate parse(const std::string& text);
  static PromptTemplate load(const std::string& path);
  static PromptTemplate default_template();

  std::string render(const std::string& instruction,
                     const std::vector<std::string>& source_prefix,
                     const std::vector<std::string>& target_prefix) const;

  const std::string& text() const { return text_; }

 private:
  explicit PromptTemplate(std::string text) : text_(std::move(text)) {}

  std::string text_;
};

// Word-for-word test translator: the i-th target word is the lexicon image
// of the i-th source word (the word itself on a lexicon miss). Ends the
// translation when the target has length_cap words or one word per revealed
// source word. Stateless and deterministic.
std::unique_ptr<TranslationAgent> mock_translator(
    std::map<std::string, std::string> lexicon, int length_cap);

}  // namespace simt
