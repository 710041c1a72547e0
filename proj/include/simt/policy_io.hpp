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

#include "simt/types.hpp"

namespace simt {

// Token-level policies produced by an external SiMT model, one JSON object
// per sentence:
//   {"source_tokens": [...], "target_tokens": [...],
//    "source_boundaries": [0/1...], "target_boundaries": [0/1...],
//    "h": [...]}
// The words of the pair are reconstructed by joining tokens at boundaries.
struct TokenPolicyRecord {
  SentencePair pair;
  TokenLevelPolicy policy;
};

TokenPolicyRecord parse_token_policy_line(const std::string& line);
std::vector<TokenPolicyRecord> read_token_policy_file(const std::string& path);

// Word-level policies, one JSON object per sentence: {"g": [...]}.
WordLevelPolicy parse_word_policy_line(const std::string& line);
std::vector<WordLevelPolicy> read_word_policy_file(const std::string& path);
std::string word_policy_to_json_line(const WordLevelPolicy& policy);
void write_word_policy_file(const std::string& path,
                            const std::vector<WordLevelPolicy>& policies);

}  // namespace simt
