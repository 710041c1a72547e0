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

#include "simt/types.hpp"

#include <algorithm>
#include <string>

namespace simt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kTokenizerFault: return "TokenizerFault";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kInvalidPolicy: return "InvalidPolicy";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kNonProgressingAgent: return "NonProgressingAgent";
    case ErrorKind::kAgentUnavailable: return "AgentUnavailable";
    case ErrorKind::kProtocolError: return "ProtocolError";
    case ErrorKind::kIncompleteTrace: return "IncompleteTrace";
    case ErrorKind::kInvalidAlignment: return "InvalidAlignment";
    case ErrorKind::kIncompleteInput: return "IncompleteInput";
    case ErrorKind::kInvalidState: return "InvalidState";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "UnknownError";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

void Memory::push_source(std::string word) {
  if (finished_) {
    raise(ErrorKind::kInvalidState, "memory is finished, cannot read more source");
  }
  source_read_.push_back(std::move(word));
}

void Memory::push_target(std::string word) {
  if (finished_) {
    raise(ErrorKind::kInvalidState, "memory is finished, cannot append target");
  }
  target_generated_.push_back(std::move(word));
}

int SessionTrace::reads() const {
  return static_cast<int>(
      std::count(actions.begin(), actions.end(), Action::kRead));
}

int SessionTrace::writes() const {
  return static_cast<int>(
      std::count(actions.begin(), actions.end(), Action::kWrite));
}

void validate_word_policy(const WordLevelPolicy& policy, int source_len) {
  int previous = 1;
  for (std::size_t i = 0; i < policy.read_counts.size(); ++i) {
    int value = policy.read_counts[i];
    if (value < 1 || value > source_len) {
      raise(ErrorKind::kInvalidPolicy,
            "word policy entry " + std::to_string(i) + " = " +
                std::to_string(value) + " outside [1, " +
                std::to_string(source_len) + "]");
    }
    if (value < previous) {
      raise(ErrorKind::kInvalidPolicy,
            "word policy decreases at entry " + std::to_string(i));
    }
    previous = value;
  }
}

void validate_token_policy(const TokenLevelPolicy& policy, int token_count) {
  int previous = 1;
  for (std::size_t i = 0; i < policy.read_counts.size(); ++i) {
    int value = policy.read_counts[i];
    if (value < 1 || value > token_count) {
      raise(ErrorKind::kInvalidPolicy,
            "token policy entry " + std::to_string(i) + " = " +
                std::to_string(value) + " outside [1, " +
                std::to_string(token_count) + "]");
    }
    if (value < previous) {
      raise(ErrorKind::kInvalidPolicy,
            "token policy decreases at entry " + std::to_string(i));
    }
    previous = value;
  }
}

void validate_boundary_config(const BoundaryConfig& cfg) {
  if (cfg.min_first_words < 1) {
    raise(ErrorKind::kInvalidParameter, "boundary lower bound must be >= 1");
  }
  if (cfg.max_first_words < cfg.min_first_words) {
    raise(ErrorKind::kInvalidParameter,
          "boundary upper bound must be >= lower bound");
  }
}

namespace {

// Checks one side of a pair: boundary flags line up with tokens, the number
// of set flags equals the word count, and joining each word's tokens gives
// back the word. Unflagged tokens after the last word boundary are legal
// (external tokenizations may append end markers); they belong to no word.
void validate_side(const std::vector<std::string>& words,
                   const std::vector<std::string>& tokens,
                   const std::vector<std::uint8_t>& boundaries,
                   const char* side) {
  if (words.empty()) {
    raise(ErrorKind::kInvalidState,
          std::string(side) + " word sequence is empty");
  }
  if (tokens.size() != boundaries.size()) {
    raise(ErrorKind::kShapeMismatch,
          std::string(side) + " boundary map length != token count");
  }
  std::size_t word_index = 0;
  std::string assembled;
  for (std::size_t m = 0; m < tokens.size(); ++m) {
    assembled += tokens[m];
    if (boundaries[m]) {
      if (word_index >= words.size()) {
        raise(ErrorKind::kInvalidState,
              std::string(side) + " has more boundary flags than words");
      }
      if (assembled != words[word_index]) {
        raise(ErrorKind::kInvalidState,
              std::string(side) + " tokens of word " +
                  std::to_string(word_index) + " do not re-join to the word");
      }
      assembled.clear();
      ++word_index;
    }
  }
  if (word_index != words.size()) {
    raise(ErrorKind::kInvalidState,
          std::string(side) + " boundary flags do not cover all words");
  }
}

}  // namespace

void validate_pair(const SentencePair& pair) {
  validate_side(pair.source_words, pair.source_tokens, pair.source_boundaries,
                "source");
  validate_side(pair.target_words, pair.target_tokens, pair.target_boundaries,
                "target");
}

void validate_trace(const SessionTrace& trace) {
  int writes = trace.writes();
  int reads = trace.reads();
  if (writes + reads != static_cast<int>(trace.actions.size())) {
    raise(ErrorKind::kInvalidState, "trace actions contain unknown events");
  }
  if (writes != static_cast<int>(trace.translation.size())) {
    raise(ErrorKind::kInvalidState, "WRITE count != translation length");
  }
  if (writes != trace.realized_policy.length()) {
    raise(ErrorKind::kInvalidState, "WRITE count != realized policy length");
  }
  if (writes != static_cast<int>(trace.emission_times_ms.size())) {
    raise(ErrorKind::kInvalidState, "WRITE count != emission timestamp count");
  }
  if (trace.source_len() < 1) {
    raise(ErrorKind::kInvalidState, "trace has no source arrival schedule");
  }
  if (reads > trace.source_len()) {
    raise(ErrorKind::kInvalidState, "more READ events than source words");
  }
  validate_word_policy(trace.realized_policy, trace.source_len());
  for (std::size_t i = 1; i < trace.emission_times_ms.size(); ++i) {
    if (trace.emission_times_ms[i] < trace.emission_times_ms[i - 1]) {
      raise(ErrorKind::kInvalidState, "emission times decrease");
    }
  }
}

}  // namespace simt
