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
#include <string>
#include <vector>

#include "simt/translator.hpp"
#include "simt/types.hpp"

namespace simt {

struct PrefixPair {
  std::vector<std::string> source;
  std::vector<std::string> target;
};

// The deterministic core of the prefix construction: given the source cut j
// in [k, J], the target prefix length is i = min(j - k + 1, I).
PrefixPair prefix_for_read_count(const SentencePair& pair, int k,
                                 int read_count);

// Training prefix pair for the wait-k policy. With k >= J the whole pair
// comes back; otherwise j is drawn uniformly from [k, J] and the prefixes
// are (x_<=j, y_<=i) with i as above. Identical seeds give identical draws.
PrefixPair build_prefix_pair(const SentencePair& pair, int k,
                             std::uint64_t rng_seed);

enum class SftMode { kFullSentence, kWaitkPrefix };

struct SftOptions {
  SftMode mode = SftMode::kFullSentence;
  int prefix_k = 5;            // used by kWaitkPrefix
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::string instruction;
};

// Fine-tuning records as JSON Lines: {"prompt": ..., "completion": ...}.
// The prompt is the template rendered with an empty target slot over the
// full sentence or the drawn source prefix; the completion is the matching
// target text. Sampling is uniform without replacement, records keep corpus
// order, and the output is byte-identical for identical seeds.
std::vector<std::string> emit_sft_dataset(
    const std::vector<SentencePair>& corpus, const PromptTemplate& tmpl,
    const SftOptions& options);

void write_sft_dataset(const std::string& path,
                       const std::vector<std::string>& records);

}  // namespace simt
