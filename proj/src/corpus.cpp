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

#include "simt/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace simt {

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream stream(line);
  std::string word;
  while (stream >> word) {
    words.push_back(word);
  }
  return words;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string joined;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) joined += ' ';
    joined += words[i];
  }
  return joined;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::kIoError, "cannot open " + path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(line);
  }
  return lines;
}

namespace {

void tokenize_side(const std::vector<std::string>& words,
                   const Tokenizer& tokenizer,
                   std::vector<std::string>* tokens,
                   std::vector<std::uint8_t>* boundaries) {
  for (const std::string& word : words) {
    std::vector<std::string> pieces = tokenizer.split_word(word);
    if (pieces.empty()) {
      raise(ErrorKind::kTokenizerFault,
            "tokenizer produced no tokens for word '" + word + "'");
    }
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      tokens->push_back(pieces[p]);
      boundaries->push_back(p + 1 == pieces.size() ? 1 : 0);
    }
  }
}

}  // namespace

SentencePair build_sentence_pair(const std::string& source_line,
                                 const std::string& target_line,
                                 const Tokenizer& tokenizer) {
  SentencePair pair;
  pair.source_words = split_words(source_line);
  pair.target_words = split_words(target_line);
  if (pair.source_words.empty()) {
    raise(ErrorKind::kEmptyInput, "source line has no words");
  }
  if (pair.target_words.empty()) {
    raise(ErrorKind::kEmptyInput, "target line has no words");
  }
  tokenize_side(pair.source_words, tokenizer, &pair.source_tokens,
                &pair.source_boundaries);
  tokenize_side(pair.target_words, tokenizer, &pair.target_tokens,
                &pair.target_boundaries);
  validate_pair(pair);
  return pair;
}

std::vector<SentencePair> read_parallel_corpus(const std::string& source_path,
                                               const std::string& target_path,
                                               const Tokenizer& tokenizer) {
  std::vector<std::string> source_lines = read_lines(source_path);
  std::vector<std::string> target_lines = read_lines(target_path);
  if (source_lines.size() != target_lines.size()) {
    raise(ErrorKind::kShapeMismatch,
          "parallel files differ in line count: " +
              std::to_string(source_lines.size()) + " vs " +
              std::to_string(target_lines.size()));
  }
  std::vector<SentencePair> corpus;
  corpus.reserve(source_lines.size());
  for (std::size_t i = 0; i < source_lines.size(); ++i) {
    try {
      corpus.push_back(
          build_sentence_pair(source_lines[i], target_lines[i], tokenizer));
    } catch (const Error& e) {
      throw Error(e.kind(),
                  "line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return corpus;
}

}  // namespace simt
