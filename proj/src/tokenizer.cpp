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

#include "simt/tokenizer.hpp"

#include "simt/types.hpp"

namespace simt {

namespace {

// Byte offsets of code point starts, plus the end offset.
std::vector<std::size_t> code_point_starts(const std::string& word) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if ((static_cast<unsigned char>(word[i]) & 0xC0) != 0x80) {
      starts.push_back(i);
    }
  }
  starts.push_back(word.size());
  return starts;
}

}  // namespace

FixedChunkTokenizer::FixedChunkTokenizer(int chunk_len, int min_split_len)
    : chunk_len_(chunk_len), min_split_len_(min_split_len) {
  if (chunk_len < 1 || min_split_len < 1) {
    raise(ErrorKind::kInvalidParameter,
          "chunk_len and min_split_len must be >= 1");
  }
}

std::vector<std::string> FixedChunkTokenizer::split_word(
    const std::string& word) const {
  std::vector<std::size_t> starts = code_point_starts(word);
  std::size_t length = starts.size() - 1;
  if (length < static_cast<std::size_t>(min_split_len_)) {
    return {word};
  }
  std::vector<std::string> pieces;
  for (std::size_t begin = 0; begin < length;
       begin += static_cast<std::size_t>(chunk_len_)) {
    std::size_t end = std::min(begin + static_cast<std::size_t>(chunk_len_),
                               length);
    pieces.push_back(word.substr(starts[begin], starts[end] - starts[begin]));
  }
  return pieces;
}

}  // namespace simt
