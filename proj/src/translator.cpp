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

#include "simt/translator.hpp"

#include <fstream>
#include <sstream>

#include "simt/corpus.hpp"

namespace simt {

namespace {

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string replace_once(std::string text, const std::string& placeholder,
                         const std::string& value) {
  std::size_t pos = text.find(placeholder);
  text.replace(pos, placeholder.size(), value);
  return text;
}

class MockTranslator final : public TranslationAgent {
 public:
  MockTranslator(std::map<std::string, std::string> lexicon, int length_cap)
      : lexicon_(std::move(lexicon)), length_cap_(length_cap) {}

  NextWord next_word(const std::string& /*instruction*/,
                     const std::vector<std::string>& source_prefix,
                     const std::vector<std::string>& target_prefix) override {
    const std::size_t next_index = target_prefix.size();  // 0-based word i-1
    if (next_index >= static_cast<std::size_t>(length_cap_)) {
      return NextWord::end();
    }
    if (next_index >= source_prefix.size()) {
      // One word emitted per revealed source word; with the full source read
      // this is the end of the sentence, under an over-eager policy it ends
      // the session early.
      return NextWord::end();
    }
    const std::string& source_word = source_prefix[next_index];
    auto hit = lexicon_.find(source_word);
    const std::string& image =
        hit != lexicon_.end() ? hit->second : source_word;
    // Word granularity is enforced by splitting the image.
    std::vector<std::string> pieces = split_words(image);
    return NextWord::of(pieces.empty() ? source_word : pieces.front());
  }

 private:
  std::map<std::string, std::string> lexicon_;
  int length_cap_;
};

}  // namespace

PromptTemplate PromptTemplate::parse(const std::string& text) {
  for (const char* placeholder :
       {"{instruction}", "{source}", "{target_prefix}"}) {
    std::size_t n = count_occurrences(text, placeholder);
    if (n != 1) {
      raise(ErrorKind::kInvalidParameter,
            std::string("template must contain ") + placeholder +
                " exactly once, found " + std::to_string(n));
    }
  }
  return PromptTemplate(text);
}

PromptTemplate PromptTemplate::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::kIoError, "cannot open template " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  // A single trailing newline is an artifact of editing the file.
  if (!text.empty() && text.back() == '\n') {
    text.pop_back();
  }
  return parse(text);
}

PromptTemplate PromptTemplate::default_template() {
  return PromptTemplate("{instruction}\n\nInput: {source}\nOutput: {target_prefix}");
}

std::string PromptTemplate::render(
    const std::string& instruction,
    const std::vector<std::string>& source_prefix,
    const std::vector<std::string>& target_prefix) const {
  std::string prompt = text_;
  prompt = replace_once(std::move(prompt), "{instruction}", instruction);
  prompt = replace_once(std::move(prompt), "{source}",
                        join_words(source_prefix));
  prompt = replace_once(std::move(prompt), "{target_prefix}",
                        join_words(target_prefix));
  return prompt;
}

std::unique_ptr<TranslationAgent> mock_translator(
    std::map<std::string, std::string> lexicon, int length_cap) {
  if (length_cap < 1) {
    raise(ErrorKind::kInvalidParameter, "length_cap must be >= 1");
  }
  return std::make_unique<MockTranslator>(std::move(lexicon), length_cap);
}

}  // namespace simt
