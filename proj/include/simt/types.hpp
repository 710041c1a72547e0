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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace simt {

enum class ErrorKind {
  kEmptyInput,
  kTokenizerFault,
  kInvalidParameter,
  kInvalidPolicy,
  kShapeMismatch,
  kNonProgressingAgent,
  kAgentUnavailable,
  kProtocolError,
  kIncompleteTrace,
  kInvalidAlignment,
  kIncompleteInput,
  kInvalidState,
  kParseError,
  kIoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

// A parallel sentence with its subword view. Words are the whitespace units
// of the input line; tokens are the subword pieces of those words in order.
// boundaries[m] == 1 marks the last token of a word, so the number of set
// flags equals the word count on that side.
struct SentencePair {
  std::vector<std::string> source_words;
  std::vector<std::string> target_words;
  std::vector<std::string> source_tokens;
  std::vector<std::string> target_tokens;
  std::vector<std::uint8_t> source_boundaries;
  std::vector<std::uint8_t> target_boundaries;

  int source_len() const { return static_cast<int>(source_words.size()); }
  int target_len() const { return static_cast<int>(target_words.size()); }
  int source_token_len() const { return static_cast<int>(source_tokens.size()); }
  int target_token_len() const { return static_cast<int>(target_tokens.size()); }
};

// Source-token count available when generating each target token. Entries
// are in [1, token_count] and never decrease: a read token stays read.
struct TokenLevelPolicy {
  std::vector<int> read_counts;

  int length() const { return static_cast<int>(read_counts.size()); }
};

// Source-word count available when generating each target word. This is the
// policy representation every agent, metric and trace in this project uses.
struct WordLevelPolicy {
  std::vector<int> read_counts;

  int length() const { return static_cast<int>(read_counts.size()); }
};

// Lower and upper bound on the number of source words read before the first
// target word; both bounds shift by one for each later target word.
struct BoundaryConfig {
  int min_first_words = 1;
  int max_first_words = 3;
};

// Shared store of one simultaneous session: the instruction plus the source
// words read and target words generated so far. Append-only. Once finish()
// has been called further appends are rejected.
class Memory {
 public:
  explicit Memory(std::string instruction)
      : instruction_(std::move(instruction)) {}

  const std::string& instruction() const { return instruction_; }
  const std::vector<std::string>& source_read() const { return source_read_; }
  const std::vector<std::string>& target_generated() const {
    return target_generated_;
  }
  bool finished() const { return finished_; }

  void push_source(std::string word);
  void push_target(std::string word);
  void finish() { finished_ = true; }

 private:
  std::string instruction_;
  std::vector<std::string> source_read_;
  std::vector<std::string> target_generated_;
  bool finished_ = false;
};

enum class Action : char { kRead = 'R', kWrite = 'W' };

// Full record of one simultaneous run. realized_policy holds the source read
// count at each WRITE; the timestamp vectors are milliseconds since session
// start. source_arrival_times_ms always covers the whole source, read or not,
// so its length recovers the source length J.
struct SessionTrace {
  std::vector<Action> actions;
  WordLevelPolicy realized_policy;
  std::vector<std::int64_t> emission_times_ms;
  std::vector<std::int64_t> source_arrival_times_ms;
  std::vector<std::string> translation;
  std::vector<std::string> warnings;

  int reads() const;
  int writes() const;
  int source_len() const {
    return static_cast<int>(source_arrival_times_ms.size());
  }
};

// Invariant checks. Each throws Error (kInvalidPolicy, kInvalidParameter,
// kShapeMismatch or kInvalidState) naming the violated condition.
void validate_word_policy(const WordLevelPolicy& policy, int source_len);
void validate_token_policy(const TokenLevelPolicy& policy, int token_count);
void validate_boundary_config(const BoundaryConfig& cfg);
void validate_pair(const SentencePair& pair);
void validate_trace(const SessionTrace& trace);

}  // namespace simt
