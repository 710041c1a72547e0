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

#include <memory>

#include "simt/types.hpp"

namespace simt {

// What a policy agent sees when deciding: counts only, never the text.
struct MemoryView {
  int source_read = 0;
  int target_len = 0;
  bool source_exhausted = false;
};

// Decides, each working cycle, whether the session reads the next source
// word or writes the next target word. The shipped agents are deterministic
// functions of the view and return kWrite once the source is exhausted; the
// orchestrator additionally forces kWrite in that state as the single
// enforcement point.
class PolicyAgent {
 public:
  virtual ~PolicyAgent() = default;

  virtual Action decide(const MemoryView& view) = 0;
};

// Fixed policy: read k source words, then alternate one write with one read.
// Induced word-level policy over (J, I): g_i = min(k + i - 1, J).
std::unique_ptr<PolicyAgent> waitk_agent(int k);

// Replays an externally computed word-level policy: READ until the source
// read count reaches the policy entry for the next target word, then WRITE.
// After the policy is spent it keeps returning WRITE so the translator can
// emit its end marker. Throws kInvalidPolicy when the policy violates the
// word-policy invariants for source_len.
std::unique_ptr<PolicyAgent> scripted_agent(WordLevelPolicy policy,
                                            int source_len);

// Word-level policy from a token-level one. For each target token that ends
// a target word, count the source words whose tokens all lie within the
// first h_n source tokens (u complete words) and take min(u + 1, J). The
// result is clamped to be non-decreasing before it is returned; READ actions
// cannot be undone, so a decreasing policy is unrealizable.
WordLevelPolicy token_to_word_policy(const SentencePair& pair,
                                     const TokenLevelPolicy& token_policy);

// Boundary restriction: clamp each entry into [i-1+min, i-1+max] and then
// into [1, J], suppressing outlier policies at both extremes.
WordLevelPolicy apply_boundary(const WordLevelPolicy& policy,
                               const BoundaryConfig& cfg, int source_len);

// Replays an agent against bare lengths and records the source read count at
// each of the target_len WRITEs. Throws kNonProgressingAgent when the agent
// fails to produce them within source_len reads + target_len writes + 1
// steps (e.g. it keeps reading an exhausted source).
WordLevelPolicy induced_policy(PolicyAgent& agent, int source_len,
                               int target_len);

}  // namespace simt
