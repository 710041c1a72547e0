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

#include "simt/tokenizer.hpp"
#include "simt/types.hpp"

namespace simt {

// Whitespace segmentation of a pre-tokenized corpus line. Runs of whitespace
// collapse; leading and trailing whitespace is dropped.
std::vector<std::string> split_words(const std::string& line);

std::string join_words(const std::vector<std::string>& words);

// Reads UTF-8 text, one sentence per line. Throws kIoError when the file
// cannot be opened.
std::vector<std::string> read_lines(const std::string& path);

// Builds the word and token views of one parallel sentence. Throws
// kEmptyInput when either line has no words and kTokenizerFault when the
// tokenizer yields no pieces for a word.
SentencePair build_sentence_pair(const std::string& source_line,
                                 const std::string& target_line,
                                 const Tokenizer& tokenizer);

// Line-aligned parallel files. Throws kShapeMismatch when line counts differ.
std::vector<SentencePair> read_parallel_corpus(const std::string& source_path,
                                               const std::string& target_path,
                                               const Tokenizer& tokenizer);

}  // namespace simt
