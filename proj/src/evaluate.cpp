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

#include "simt/evaluate.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace simt {

namespace {

constexpr double kUnavailable = std::numeric_limits<double>::quiet_NaN();

bool scoreable(const LineResult& line) {
  return line.ok() && !line.trace.translation.empty();
}

BucketMetrics score_bucket(const std::string& name,
                           const EvaluationInputs& inputs,
                           const std::vector<std::size_t>& lines) {
  BucketMetrics bucket;
  bucket.bucket = name;
  bucket.sentences = static_cast<int>(lines.size());

  double al_sum = 0.0;
  double al_ca_sum = 0.0;
  std::vector<std::vector<std::string>> hyps;
  std::vector<std::vector<std::string>> refs;
  std::vector<std::vector<std::string>> aligned_translations;
  std::vector<AlignmentSet> hyp_alignments;

  for (std::size_t line : lines) {
    const LineResult& result = inputs.traces[line];
    if (!result.ok()) {
      ++bucket.failed;
      continue;
    }
    if (!scoreable(result)) {
      continue;
    }
    const SessionTrace& trace = result.trace;
    al_sum += average_lagging(trace.realized_policy, trace.source_len(),
                              static_cast<int>(trace.translation.size()));
    al_ca_sum += computation_aware_al(trace, trace.source_len());
    hyps.push_back(trace.translation);
    refs.push_back(inputs.references[line]);
    if (inputs.hypothesis_alignments) {
      aligned_translations.push_back(trace.translation);
      hyp_alignments.push_back((*inputs.hypothesis_alignments)[line]);
    }
    ++bucket.scored;
  }

  if (bucket.scored == 0) {
    bucket.al_words = kUnavailable;
    bucket.al_ca_ms = kUnavailable;
    bucket.bleu = kUnavailable;
    bucket.hallucination = kUnavailable;
    return bucket;
  }
  bucket.al_words = al_sum / bucket.scored;
  bucket.al_ca_ms = al_ca_sum / bucket.scored;
  bucket.bleu = corpus_bleu(hyps, refs);
  bucket.hallucination =
      inputs.hypothesis_alignments
          ? hallucination_rate(aligned_translations, hyp_alignments)
          : kUnavailable;
  return bucket;
}

}  // namespace

std::vector<BucketMetrics> evaluate_corpus(const EvaluationInputs& inputs) {
  const std::size_t count = inputs.traces.size();
  if (inputs.references.size() != count) {
    raise(ErrorKind::kShapeMismatch,
          std::to_string(count) + " traces vs " +
              std::to_string(inputs.references.size()) + " references");
  }
  if (inputs.hypothesis_alignments &&
      inputs.hypothesis_alignments->size() != count) {
    raise(ErrorKind::kShapeMismatch,
          "hypothesis alignments not line-aligned with traces");
  }
  if (inputs.reference_alignments &&
      inputs.reference_alignments->size() != count) {
    raise(ErrorKind::kShapeMismatch,
          "reference alignments not line-aligned with traces");
  }

  std::vector<std::size_t> all(count);
  for (std::size_t i = 0; i < count; ++i) {
    all[i] = i;
  }
  std::vector<BucketMetrics> report;
  report.push_back(score_bucket("all", inputs, all));

  if (inputs.reference_alignments) {
    // Difficulty comes from reordering between source and reference, so the
    // buckets are fixed by the data, not by the system under evaluation.
    std::vector<ReorderStats> stats;
    stats.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const AlignmentSet& alignment = (*inputs.reference_alignments)[i];
      validate_alignment(alignment, inputs.traces[i].trace.source_len(),
                         static_cast<int>(inputs.references[i].size()));
      stats.push_back(reorder_stats(alignment));
    }
    std::vector<Difficulty> labels = difficulty_partition(stats);
    for (Difficulty level :
         {Difficulty::kEasy, Difficulty::kMedium, Difficulty::kHard}) {
      std::vector<std::size_t> lines;
      for (std::size_t i = 0; i < count; ++i) {
        if (labels[i] == level) {
          lines.push_back(i);
        }
      }
      report.push_back(score_bucket(to_string(level), inputs, lines));
    }
  }
  return report;
}

namespace {

std::string format_cell(double value) {
  if (std::isnan(value)) {
    return "-";
  }
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  out << value;
  return out.str();
}

}  // namespace

std::string render_tsv(const std::vector<BucketMetrics>& buckets) {
  std::ostringstream out;
  out << "bucket\tsentences\tscored\tfailed\tal_words\tal_ca_ms\tbleu\t"
         "hallucination_rate\n";
  for (const BucketMetrics& bucket : buckets) {
    out << bucket.bucket << '\t' << bucket.sentences << '\t' << bucket.scored
        << '\t' << bucket.failed << '\t' << format_cell(bucket.al_words)
        << '\t' << format_cell(bucket.al_ca_ms) << '\t'
        << format_cell(bucket.bleu) << '\t'
        << format_cell(bucket.hallucination) << '\n';
  }
  return out.str();
}

}  // namespace simt
