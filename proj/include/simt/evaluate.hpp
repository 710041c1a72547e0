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

#include <optional>
#include <string>
#include <vector>

#include "simt/alignment.hpp"
#include "simt/metrics.hpp"
#include "simt/session.hpp"

namespace simt {

// Everything the evaluation step consumes. Hypothesis alignments link source
// words to translation words and feed the hallucination rate; reference
// alignments link source words to reference words and drive the difficulty
// partition. Both are optional and line-aligned with the traces.
struct EvaluationInputs {
  std::vector<LineResult> traces;
  std::vector<std::vector<std::string>> references;
  std::optional<std::vector<AlignmentSet>> hypothesis_alignments;
  std::optional<std::vector<AlignmentSet>> reference_alignments;
};

// Metrics of one bucket. AL and AL-CA are means of per-sentence values over
// scored lines; BLEU and the hallucination rate are corpus-level. NaN marks
// metrics whose inputs were not provided. Failed lines and lines with an
// empty translation are counted but not scored.
struct BucketMetrics {
  std::string bucket;
  int sentences = 0;
  int scored = 0;
  int failed = 0;
  double al_words = 0.0;
  double al_ca_ms = 0.0;
  double bleu = 0.0;
  double hallucination = 0.0;
};

// The "all" bucket first, then easy/medium/hard when reference alignments
// are present.
std::vector<BucketMetrics> evaluate_corpus(const EvaluationInputs& inputs);

// Tab-separated report with a header row; NaN renders as "-".
std::string render_tsv(const std::vector<BucketMetrics>& buckets);

}  // namespace simt
