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

#include "simt/policy.hpp"

#include <algorithm>
#include <string>

namespace simt {

namespace {

class WaitkAgent final : public PolicyAgent {
 public:
  explicit WaitkAgent(int k) : k_(k) {}

  Action decide(const MemoryView& view) override {
    if (view.source_exhausted) {
      return Action::kWrite;
    }
    return view.source_read - view.target_len >= k_ ? Action::kWrite
                                                    : Action::kRead;
  }

 private:
  int k_;
};

class ScriptedAgent final : public PolicyAgent {
 public:
  explicit ScriptedAgent(WordLevelPolicy policy)
      : policy_(std::move(policy)) {}

  Action decide(const MemoryView& view) override {
    if (view.source_exhausted) {
      return Action::kWrite;
    }
    if (view.target_len >= policy_.length()) {
      // Policy spent: keep writing so the translator can end the session.
      return Action::kWrite;
    }
    return view.source_read >= policy_.read_counts[view.target_len]
               ? Action::kWrite
               : Action::kRead;
  }

 private:
  WordLevelPolicy policy_;
};

}  // namespace

std::unique_ptr<PolicyAgent> waitk_agent(int k) {
  if (k < 1) {
    raise(ErrorKind::kInvalidParameter, "wait-k needs k >= 1");
  }
  return std::make_unique<WaitkAgent>(k);
}

std::unique_ptr<PolicyAgent> scripted_agent(WordLevelPolicy policy,
                                            int source_len) {
  validate_word_policy(policy, source_len);
  return std::make_unique<ScriptedAgent>(std::move(policy));
}

WordLevelPolicy token_to_word_policy(const SentencePair& pair,
                                     const TokenLevelPolicy& token_policy) {
  const int source_tokens = pair.source_token_len();
  const int target_tokens = pair.target_token_len();
  const int source_words = pair.source_len();
  if (token_policy.length() != target_tokens) {
    raise(ErrorKind::kShapeMismatch,
          "token policy length " + std::to_string(token_policy.length()) +
              " != target token count " + std::to_string(target_tokens));
  }
  validate_token_policy(token_policy, source_tokens);

  // complete_words[m] = source words fully contained in the first m tokens.
  std::vector<int> complete_words(source_tokens + 1, 0);
  for (int m = 0; m < source_tokens; ++m) {
    complete_words[m + 1] =
        complete_words[m] + (pair.source_boundaries[m] ? 1 : 0);
  }

  WordLevelPolicy word_policy;
  word_policy.read_counts.reserve(pair.target_len());
  int floor = 1;
  for (int n = 0; n < target_tokens; ++n) {
    if (!pair.target_boundaries[n]) {
      continue;  // only tokens that end a target word define an entry
    }
    int u = complete_words[token_policy.read_counts[n]];
    int value = std::min(u + 1, source_words);
    value = std::max(value, floor);  // running-max clamp keeps g realizable
    word_policy.read_counts.push_back(value);
    floor = value;
  }
  validate_word_policy(word_policy, source_words);
  return word_policy;
}

WordLevelPolicy apply_boundary(const WordLevelPolicy& policy,
                               const BoundaryConfig& cfg, int source_len) {
  validate_word_policy(policy, source_len);
  validate_boundary_config(cfg);
  WordLevelPolicy restricted;
  restricted.read_counts.reserve(policy.read_counts.size());
  for (int i = 0; i < policy.length(); ++i) {
    int lower = i + cfg.min_first_words;  // i is 0-based, bounds use i-1+B
    int upper = i + cfg.max_first_words;
    int value = std::min(std::max(policy.read_counts[i], lower), upper);
    restricted.read_counts.push_back(std::min(value, source_len));
  }
  validate_word_policy(restricted, source_len);
  return restricted;
}

WordLevelPolicy induced_policy(PolicyAgent& agent, int source_len,
                               int target_len) {
  if (source_len < 1 || target_len < 1) {
    raise(ErrorKind::kInvalidParameter, "lengths must be >= 1");
  }
  WordLevelPolicy policy;
  policy.read_counts.reserve(target_len);
  int reads = 0;
  const int step_limit = source_len + target_len + 1;
  for (int step = 0; step < step_limit && policy.length() < target_len;
       ++step) {
    MemoryView view{reads, policy.length(), reads == source_len};
    if (agent.decide(view) == Action::kWrite) {
      policy.read_counts.push_back(reads);
    } else if (reads < source_len) {
      ++reads;
    }
    // READ with the source exhausted falls through: no progress, and the
    // step limit below turns it into an error.
  }
  if (policy.length() < target_len) {
    raise(ErrorKind::kNonProgressingAgent,
          "agent produced " + std::to_string(policy.length()) + " of " +
              std::to_string(target_len) + " writes in " +
              std::to_string(step_limit) + " steps");
  }
  validate_word_policy(policy, source_len);
  return policy;
}

}  // namespace simt
