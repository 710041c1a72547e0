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

#include "simt/policy_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace simt {

namespace {

using nlohmann::json;

json parse_json_line(const std::string& line, const char* what) {
  json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded() || !record.is_object()) {
    raise(ErrorKind::kParseError, std::string(what) + " line is not a JSON object");
  }
  return record;
}

// Words from tokens: concatenate runs that end at a boundary flag. Tokens
// after the last flag (end markers and the like) belong to no word.
std::vector<std::string> words_from_tokens(
    const std::vector<std::string>& tokens,
    const std::vector<std::uint8_t>& boundaries, const char* side) {
  if (tokens.size() != boundaries.size()) {
    raise(ErrorKind::kShapeMismatch,
          std::string(side) + " boundaries not aligned with tokens");
  }
  std::vector<std::string> words;
  std::string current;
  for (std::size_t m = 0; m < tokens.size(); ++m) {
    current += tokens[m];
    if (boundaries[m]) {
      words.push_back(current);
      current.clear();
    }
  }
  return words;
}

template <typename T>
std::vector<T> required_array(const json& record, const char* key) {
  if (!record.contains(key)) {
    raise(ErrorKind::kParseError, std::string("missing field ") + key);
  }
  try {
    return record.at(key).get<std::vector<T>>();
  } catch (const json::exception&) {
    raise(ErrorKind::kParseError, std::string("field ") + key + " has the wrong shape");
  }
}

}  // namespace

TokenPolicyRecord parse_token_policy_line(const std::string& line) {
  json record = parse_json_line(line, "token policy");
  TokenPolicyRecord out;
  out.pair.source_tokens = required_array<std::string>(record, "source_tokens");
  out.pair.target_tokens = required_array<std::string>(record, "target_tokens");
  out.pair.source_boundaries =
      required_array<std::uint8_t>(record, "source_boundaries");
  out.pair.target_boundaries =
      required_array<std::uint8_t>(record, "target_boundaries");
  out.policy.read_counts = required_array<int>(record, "h");
  out.pair.source_words = words_from_tokens(
      out.pair.source_tokens, out.pair.source_boundaries, "source");
  out.pair.target_words = words_from_tokens(
      out.pair.target_tokens, out.pair.target_boundaries, "target");
  validate_pair(out.pair);
  return out;
}

std::vector<TokenPolicyRecord> read_token_policy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::kIoError, "cannot open " + path);
  }
  std::vector<TokenPolicyRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      records.push_back(parse_token_policy_line(line));
    } catch (const Error& e) {
      throw Error(e.kind(),
                  path + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
  return records;
}

WordLevelPolicy parse_word_policy_line(const std::string& line) {
  json record = parse_json_line(line, "word policy");
  WordLevelPolicy policy;
  policy.read_counts = required_array<int>(record, "g");
  return policy;
}

std::vector<WordLevelPolicy> read_word_policy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::kIoError, "cannot open " + path);
  }
  std::vector<WordLevelPolicy> policies;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      policies.push_back(parse_word_policy_line(line));
    } catch (const Error& e) {
      throw Error(e.kind(),
                  path + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
  return policies;
}

std::string word_policy_to_json_line(const WordLevelPolicy& policy) {
  return json{{"g", policy.read_counts}}.dump();
}

void write_word_policy_file(const std::string& path,
                            const std::vector<WordLevelPolicy>& policies) {
  std::ofstream out(path);
  if (!out) {
    raise(ErrorKind::kIoError, "cannot write " + path);
  }
  for (const WordLevelPolicy& policy : policies) {
    out << word_policy_to_json_line(policy) << '\n';
  }
}

}  // namespace simt
