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

#include "simt/alignment.hpp"
#include "simt/types.hpp"

namespace simt {

// Average Lagging in source words:
//   AL = (1/tau) * sum_{i<=tau} [ g_i - (i-1)/r ],   r = I/J,
// where tau is the first i with g_i = J, or I when the policy never reads
// the whole source. Equals k for the wait-k policy on an I = J pair.
double average_lagging(const WordLevelPolicy& policy, int source_len,
                       int target_len);

// Computation-aware Average Lagging in milliseconds: the same truncated sum
// with g_i replaced by the wall-clock emission delay d_i of target word i,
// and the diagonal term scaled to time as (i-1)/r * D/J, where D is the
// arrival time of the last source word. Includes both compute time and
// waiting for source arrivals. Throws kIncompleteTrace when the trace lacks
// timestamps or a translation.
double computation_aware_al(const SessionTrace& trace, int source_len);

// Corpus-level case-sensitive 4-gram BLEU with brevity penalty, in [0, 100].
// Orders with hypothesis n-grams but zero matches are floored at a tiny
// constant count; zero unigram matches give exactly 0. One reference per
// hypothesis.
double corpus_bleu(const std::vector<std::vector<std::string>>& hypotheses,
                   const std::vector<std::vector<std::string>>& references);

// Fraction of translation words with no alignment link, micro-averaged over
// the corpus. Alignments are source-to-translation links.
double hallucination_rate(
    const std::vector<std::vector<std::string>>& translations,
    const std::vector<AlignmentSet>& alignments);

enum class Difficulty { kEasy, kMedium, kHard };

const char* to_string(Difficulty level);

// Splits a corpus into three equal-size difficulty buckets by sorting on
// (non-monotonic link count, max reorder distance, original index) and
// cutting the order into thirds; leftover sentences go to the earlier
// buckets.
std::vector<Difficulty> difficulty_partition(
    const std::vector<ReorderStats>& stats);

// Same, computing the stats from reference alignments validated against the
// pair shapes. Throws kIncompleteInput when alignments are missing.
std::vector<Difficulty> difficulty_partition(
    const std::vector<SentencePair>& pairs,
    const std::vector<AlignmentSet>& alignments);

}  // namespace simt
