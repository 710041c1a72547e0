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

#include <string>
#include <vector>

namespace simt {

// Subword segmentation works per word: one word in, one or more pieces out.
// Word boundaries are reconstructed from that grouping, so concatenating the
// pieces must reproduce the word exactly.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;

  virtual std::vector<std::string> split_word(const std::string& word) const = 0;
};

// Every word is its own single token.
class IdentityTokenizer final : public Tokenizer {
 public:
  std::vector<std::string> split_word(const std::string& word) const override {
    return {word};
  }
};

// Splits words of at least min_split_len code points into chunks of
// chunk_len code points ("gehe" -> "ge" "he" with the defaults, "Ich" stays
// whole). Chunk boundaries never cut a UTF-8 sequence. A deterministic
// stand-in for a trained subword model in tests and demos.
class FixedChunkTokenizer final : public Tokenizer {
 public:
  explicit FixedChunkTokenizer(int chunk_len = 2, int min_split_len = 4);

  std::vector<std::string> split_word(const std::string& word) const override;

 private:
  int chunk_len_;
  int min_split_len_;
};

}  // namespace simt
