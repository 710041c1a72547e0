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

#include "simt/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace simt {

double average_lagging(const WordLevelPolicy& policy, int source_len,
                       int target_len) {
  if (policy.length() != target_len) {
    raise(ErrorKind::kShapeMismatch,
          "policy length " + std::to_string(policy.length()) +
              " != target length " + std::to_string(target_len));
  }
  if (target_len < 1) {
    raise(ErrorKind::kEmptyInput, "average lagging needs a translation");
  }
  validate_word_policy(policy, source_len);

  const double rate = static_cast<double>(target_len) / source_len;
  int truncation = target_len;
  for (int i = 0; i < target_len; ++i) {
    if (policy.read_counts[i] == source_len) {
      truncation = i + 1;
      break;
    }
  }
  double sum = 0.0;
  for (int i = 0; i < truncation; ++i) {
    sum += policy.read_counts[i] - static_cast<double>(i) / rate;
  }
  return sum / truncation;
}

double computation_aware_al(const SessionTrace& trace, int source_len) {
  if (trace.source_len() != source_len) {
    raise(ErrorKind::kShapeMismatch,
          "trace covers " + std::to_string(trace.source_len()) +
              " source words, not " + std::to_string(source_len));
  }
  const int target_len = static_cast<int>(trace.translation.size());
  if (target_len < 1 ||
      static_cast<int>(trace.emission_times_ms.size()) != target_len ||
      trace.realized_policy.length() != target_len ||
      trace.source_arrival_times_ms.empty()) {
    raise(ErrorKind::kIncompleteTrace,
          "trace lacks translation, timestamps or realized policy");
  }

  const double rate = static_cast<double>(target_len) / source_len;
  const double source_duration =
      static_cast<double>(trace.source_arrival_times_ms.back());
  const double ms_per_source_word = source_duration / source_len;

  int truncation = target_len;
  for (int i = 0; i < target_len; ++i) {
    if (trace.realized_policy.read_counts[i] == source_len) {
      truncation = i + 1;
      break;
    }
  }
  double sum = 0.0;
  for (int i = 0; i < truncation; ++i) {
    const double delay = static_cast<double>(trace.emission_times_ms[i]);
    sum += delay - static_cast<double>(i) / rate * ms_per_source_word;
  }
  return sum / truncation;
}

namespace {

// N-grams hashed as length-prefixed joined strings; '\x1f' never occurs in
// words split on whitespace.
void count_ngrams(const std::vector<std::string>& words, int order,
                  std::unordered_map<std::string, long long>* counts) {
  const int len = static_cast<int>(words.size());
  for (int begin = 0; begin + order <= len; ++begin) {
    std::string key;
    for (int k = 0; k < order; ++k) {
      key += words[begin + k];
      key += '\x1f';
    }
    ++(*counts)[key];
  }
}

constexpr int kMaxOrder = 4;
constexpr double kFloorCount = 1e-9;

}  // namespace

double corpus_bleu(const std::vector<std::vector<std::string>>& hypotheses,
                   const std::vector<std::vector<std::string>>& references) {
  if (hypotheses.size() != references.size()) {
    raise(ErrorKind::kShapeMismatch,
          std::to_string(hypotheses.size()) + " hypotheses vs " +
              std::to_string(references.size()) + " references");
  }
  if (hypotheses.empty()) {
    raise(ErrorKind::kEmptyInput, "empty corpus");
  }

  long long hyp_len = 0;
  long long ref_len = 0;
  std::array<long long, kMaxOrder> matches{};
  std::array<long long, kMaxOrder> totals{};

  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto& hyp = hypotheses[s];
    const auto& ref = references[s];
    if (ref.empty()) {
      raise(ErrorKind::kEmptyInput,
            "reference " + std::to_string(s) + " is empty");
    }
    hyp_len += static_cast<long long>(hyp.size());
    ref_len += static_cast<long long>(ref.size());
    for (int order = 1; order <= kMaxOrder; ++order) {
      std::unordered_map<std::string, long long> hyp_counts;
      std::unordered_map<std::string, long long> ref_counts;
      count_ngrams(hyp, order, &hyp_counts);
      count_ngrams(ref, order, &ref_counts);
      for (const auto& [ngram, count] : hyp_counts) {
        totals[order - 1] += count;
        auto in_ref = ref_counts.find(ngram);
        if (in_ref != ref_counts.end()) {
          matches[order - 1] += std::min(count, in_ref->second);
        }
      }
    }
  }

  if (hyp_len == 0 || matches[0] == 0) {
    return 0.0;
  }
  double log_sum = 0.0;
  int used_orders = 0;
  for (int n = 0; n < kMaxOrder; ++n) {
    if (totals[n] == 0) {
      continue;  // every hypothesis shorter than n+1 words
    }
    const double clipped =
        matches[n] > 0 ? static_cast<double>(matches[n]) : kFloorCount;
    log_sum += std::log(clipped / static_cast<double>(totals[n]));
    ++used_orders;
  }
  const double precision_mean = std::exp(log_sum / used_orders);
  const double brevity =
      hyp_len >= ref_len
          ? 1.0
          : std::exp(1.0 - static_cast<double>(ref_len) /
                               static_cast<double>(hyp_len));
  return 100.0 * brevity * precision_mean;
}

double hallucination_rate(
    const std::vector<std::vector<std::string>>& translations,
    const std::vector<AlignmentSet>& alignments) {
  if (translations.size() != alignments.size()) {
    raise(ErrorKind::kShapeMismatch,
          std::to_string(translations.size()) + " translations vs " +
              std::to_string(alignments.size()) + " alignment sets");
  }
  long long total_words = 0;
  long long unaligned_words = 0;
  for (std::size_t s = 0; s < translations.size(); ++s) {
    const int target_len = static_cast<int>(translations[s].size());
    std::vector<char> aligned(translations[s].size(), 0);
    for (const AlignmentLink& link : alignments[s].links) {
      if (link.target < 0 || link.target >= target_len || link.source < 0) {
        raise(ErrorKind::kInvalidAlignment,
              "sentence " + std::to_string(s) + ": link target " +
                  std::to_string(link.target) + " outside translation");
      }
      aligned[link.target] = 1;
    }
    total_words += target_len;
    for (char flag : aligned) {
      if (!flag) ++unaligned_words;
    }
  }
  if (total_words == 0) {
    return 0.0;
  }
  return static_cast<double>(unaligned_words) /
         static_cast<double>(total_words);
}

const char* to_string(Difficulty level) {
  switch (level) {
    case Difficulty::kEasy: return "easy";
    case Difficulty::kMedium: return "medium";
    case Difficulty::kHard: return "hard";
  }
  return "unknown";
}

std::vector<Difficulty> difficulty_partition(
    const std::vector<ReorderStats>& stats) {
  const std::size_t count = stats.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&stats](std::size_t a, std::size_t b) {
                     return std::tie(stats[a].non_monotonic,
                                     stats[a].max_distance, a) <
                            std::tie(stats[b].non_monotonic,
                                     stats[b].max_distance, b);
                   });
  // Equal thirds; when the size is not divisible by three the earlier
  // buckets take the leftover sentence(s).
  const std::size_t base = count / 3;
  const std::size_t leftover = count % 3;
  const std::size_t easy_end = base + (leftover > 0 ? 1 : 0);
  const std::size_t medium_end = easy_end + base + (leftover > 1 ? 1 : 0);
  std::vector<Difficulty> labels(count, Difficulty::kEasy);
  for (std::size_t rank = 0; rank < count; ++rank) {
    Difficulty level = Difficulty::kEasy;
    if (rank >= medium_end) {
      level = Difficulty::kHard;
    } else if (rank >= easy_end) {
      level = Difficulty::kMedium;
    }
    labels[order[rank]] = level;
  }
  return labels;
}

std::vector<Difficulty> difficulty_partition(
    const std::vector<SentencePair>& pairs,
    const std::vector<AlignmentSet>& alignments) {
  if (pairs.size() != alignments.size()) {
    raise(ErrorKind::kIncompleteInput,
          "need one alignment set per pair: " + std::to_string(pairs.size()) +
              " pairs vs " + std::to_string(alignments.size()) + " sets");
  }
  std::vector<ReorderStats> stats;
  stats.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    validate_alignment(alignments[i], pairs[i].source_len(),
                       pairs[i].target_len());
    stats.push_back(reorder_stats(alignments[i]));
  }
  return difficulty_partition(stats);
}

}  // namespace simt
