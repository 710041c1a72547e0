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

#include "simt/sft.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "simt/corpus.hpp"
#include "simt/rng.hpp"

namespace simt {

PrefixPair prefix_for_read_count(const SentencePair& pair, int k,
                                 int read_count) {
  if (k < 1) {
    raise(ErrorKind::kInvalidParameter, "k must be >= 1");
  }
  const int source_len = pair.source_len();
  const int target_len = pair.target_len();
  if (read_count < k || read_count > source_len) {
    raise(ErrorKind::kInvalidParameter,
          "read count " + std::to_string(read_count) + " outside [" +
              std::to_string(k) + ", " + std::to_string(source_len) + "]");
  }
  const int target_cut = std::min(read_count - k + 1, target_len);
  PrefixPair prefix;
  prefix.source.assign(pair.source_words.begin(),
                       pair.source_words.begin() + read_count);
  prefix.target.assign(pair.target_words.begin(),
                       pair.target_words.begin() + target_cut);
  return prefix;
}

PrefixPair build_prefix_pair(const SentencePair& pair, int k,
                             std::uint64_t rng_seed) {
  if (k < 1) {
    raise(ErrorKind::kInvalidParameter, "k must be >= 1");
  }
  const int source_len = pair.source_len();
  if (k >= source_len) {
    return PrefixPair{pair.source_words, pair.target_words};
  }
  std::mt19937_64 rng(rng_seed);
  const int read_count =
      static_cast<int>(uniform_draw(rng, k, source_len));
  return prefix_for_read_count(pair, k, read_count);
}

std::vector<std::string> emit_sft_dataset(
    const std::vector<SentencePair>& corpus, const PromptTemplate& tmpl,
    const SftOptions& options) {
  if (options.sample_count > corpus.size()) {
    raise(ErrorKind::kInvalidParameter,
          "cannot sample " + std::to_string(options.sample_count) +
              " of " + std::to_string(corpus.size()) + " pairs");
  }
  if (options.mode == SftMode::kWaitkPrefix && options.prefix_k < 1) {
    raise(ErrorKind::kInvalidParameter, "k must be >= 1");
  }

  // Uniform sample without replacement: partial Fisher-Yates over the index
  // vector, then corpus order restored.
  std::vector<std::size_t> indices(corpus.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    indices[i] = i;
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.sample_count; ++i) {
    const std::size_t pick = static_cast<std::size_t>(uniform_draw(
        rng, static_cast<std::int64_t>(i),
        static_cast<std::int64_t>(indices.size()) - 1));
    std::swap(indices[i], indices[pick]);
  }
  indices.resize(options.sample_count);
  std::sort(indices.begin(), indices.end());

  std::vector<std::string> records;
  records.reserve(indices.size());
  for (std::size_t record = 0; record < indices.size(); ++record) {
    const SentencePair& pair = corpus[indices[record]];
    PrefixPair prefix;
    if (options.mode == SftMode::kFullSentence) {
      prefix.source = pair.source_words;
      prefix.target = pair.target_words;
    } else {
      prefix = build_prefix_pair(pair, options.prefix_k,
                                 derive_seed(options.seed, record));
    }
    nlohmann::json line{
        {"prompt", tmpl.render(options.instruction, prefix.source, {})},
        {"completion", join_words(prefix.target)}};
    records.push_back(line.dump());
  }
  return records;
}

void write_sft_dataset(const std::string& path,
                       const std::vector<std::string>& records) {
  std::ofstream out(path);
  if (!out) {
    raise(ErrorKind::kIoError, "cannot write " + path);
  }
  for (const std::string& record : records) {
    out << record << '\n';
  }
}

}  // namespace simt
