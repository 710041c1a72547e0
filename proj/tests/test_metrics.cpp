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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "simt/corpus.hpp"
#include "simt/metrics.hpp"
#include "simt/policy.hpp"
#include "simt/session.hpp"
#include "simt/tokenizer.hpp"
#include "simt/translator.hpp"
#include "fixtures/bleu_cases.hpp"
#include "support/test_util.hpp"

using namespace simt;

TEST_CASE("average lagging on worked examples") {
  CHECK(average_lagging(WordLevelPolicy{{1, 2, 3}}, 3, 3) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(average_lagging(WordLevelPolicy{{3, 3, 3}}, 3, 3) ==
        doctest::Approx(3.0).epsilon(1e-12));

  // Independent step-through of the truncated sum for g=(2,4,5,5), J=5, I=4:
  // r = 4/5, tau = 3 (g_3 = 5 = J), terms 2-0, 4-1/r, 5-2/r.
  const double rate = 4.0 / 5.0;
  const double expected = ((2.0 - 0.0 / rate) + (4.0 - 1.0 / rate) +
                           (5.0 - 2.0 / rate)) / 3.0;
  CHECK(average_lagging(WordLevelPolicy{{2, 4, 5, 5}}, 5, 4) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("average lagging equals k on every wait-k diagonal") {
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; k < std::min(n, 11); ++k) {
      auto agent = waitk_agent(k);
      WordLevelPolicy policy = induced_policy(*agent, n, n);
      CHECK(average_lagging(policy, n, n) ==
            doctest::Approx(static_cast<double>(k)).epsilon(1e-10));
    }
  }
}

TEST_CASE("average lagging never decreases while the truncation is fixed") {
  // Pointwise increase raises every summand, so AL is monotone as long as
  // the bump does not make the policy reach the full source earlier. (It is
  // NOT monotone in general; see the truncation test below.)
  std::mt19937 rng(8080);
  for (int iteration = 0; iteration < 300; ++iteration) {
    std::uniform_int_distribution<int> source_dist(3, 10);
    const int source_len = source_dist(rng);
    std::uniform_int_distribution<int> target_dist(1, 10);
    const int target_len = target_dist(rng);
    WordLevelPolicy low;
    int value = 1;
    for (int i = 0; i < target_len; ++i) {
      std::uniform_int_distribution<int> step(0, 2);
      value = std::min(source_len - 1, value + (i == 0 ? 0 : step(rng)));
      low.read_counts.push_back(value);
    }
    WordLevelPolicy high = low;
    // Bump entries while staying below the full source: tau stays at I.
    for (int i = target_len - 1; i >= 0; --i) {
      std::uniform_int_distribution<int> bump(0, 1);
      int ceiling =
          i + 1 < target_len ? high.read_counts[i + 1] : source_len - 1;
      high.read_counts[i] =
          std::min(ceiling, high.read_counts[i] + bump(rng));
    }
    CHECK(average_lagging(high, source_len, target_len) >=
          average_lagging(low, source_len, target_len) - 1e-12);
  }
}

TEST_CASE("average lagging can drop when a bump truncates the sum earlier") {
  // Raising g_3 from 3 to 4 makes the policy hit the full source one word
  // earlier, cutting the largest summand out of the truncated average.
  WordLevelPolicy low{{1, 1, 3, 4, 4, 4, 4, 4, 4}};
  WordLevelPolicy high{{1, 1, 4, 4, 4, 4, 4, 4, 4}};
  const double al_low = average_lagging(low, 4, 9);
  const double al_high = average_lagging(high, 4, 9);
  CHECK(al_low == doctest::Approx(19.0 / 12.0).epsilon(1e-12));
  CHECK(al_high == doctest::Approx(14.0 / 9.0).epsilon(1e-12));
  CHECK(al_high < al_low);
}

TEST_CASE("average lagging validates its inputs") {
  CHECK_ERROR_KIND(average_lagging(WordLevelPolicy{{1}}, 2, 2),
                   ErrorKind::kShapeMismatch);
  CHECK_ERROR_KIND(average_lagging(WordLevelPolicy{{}}, 2, 0),
                   ErrorKind::kEmptyInput);
}

TEST_CASE("computation-aware lagging on a hand-timed session") {
  ManualClock clock;
  SessionConfig config;
  config.source_arrival_interval_ms = 100;
  auto policy = waitk_agent(1);
  auto translator = mock_translator({}, 3);
  SessionTrace trace =
      run_session({"a", "b", "c"}, *policy, *translator, "", config, &clock);
  // Every word waits exactly one 100 ms arrival beyond the time diagonal.
  CHECK(computation_aware_al(trace, 3) ==
        doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("computation-aware lagging is about zero without streaming") {
  ManualClock clock;
  auto policy = waitk_agent(1);
  auto translator = mock_translator({}, 4);
  SessionTrace trace = run_session({"a", "b", "c", "d"}, *policy, *translator,
                                   "", SessionConfig{}, &clock);
  CHECK(computation_aware_al(trace, 4) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("computation-aware lagging needs timestamps") {
  SessionTrace trace;
  trace.source_arrival_times_ms = {0, 0};
  CHECK_ERROR_KIND(computation_aware_al(trace, 2),
                   ErrorKind::kIncompleteTrace);
}

namespace {

std::vector<std::vector<std::string>> split_all(
    const std::vector<std::string>& lines) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& line : lines) {
    out.push_back(split_words(line));
  }
  return out;
}

}  // namespace

TEST_CASE("corpus BLEU basics") {
  std::vector<std::vector<std::string>> refs = {
      {"the", "cat", "sat", "on", "the", "mat"}};
  CHECK(corpus_bleu(refs, refs) == doctest::Approx(100.0).epsilon(1e-12));
  std::vector<std::vector<std::string>> four = {{"a", "b", "c", "d"}};
  CHECK(corpus_bleu(four, four) == doctest::Approx(100.0).epsilon(1e-12));

  CHECK_ERROR_KIND(corpus_bleu({{"a"}}, {}), ErrorKind::kShapeMismatch);
  CHECK_ERROR_KIND(corpus_bleu({}, {}), ErrorKind::kEmptyInput);
  CHECK_ERROR_KIND(corpus_bleu({{"a"}}, {{}}), ErrorKind::kEmptyInput);
}

TEST_CASE("corpus BLEU floor smoothing on the one-substitution case") {
  // hyp (a,x,c,d) vs ref (a,b,c,d): precisions 3/4 and 1/3, zero matches at
  // orders 3 and 4 floored at 1e-9 counts. Independent arithmetic:
  const double expected =
      100.0 * std::exp((std::log(3.0 / 4.0) + std::log(1.0 / 3.0) +
                        std::log(1e-9 / 2.0) + std::log(1e-9 / 1.0)) /
                       4.0);
  CHECK(corpus_bleu({{"a", "x", "c", "d"}}, {{"a", "b", "c", "d"}}) ==
        doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("corpus BLEU is zero without any n-gram match") {
  CHECK(corpus_bleu({{"x", "y"}}, {{"a", "b"}}) == 0.0);
}

TEST_CASE("corpus BLEU matches the frozen reference values") {
  for (const simt_test::BleuCaseData& data : simt_test::bleu_cases()) {
    double got = corpus_bleu(split_all(data.hyps), split_all(data.refs));
    CHECK(std::abs(got - data.expected) < 0.1);
    // The implementations actually agree far tighter than the 0.1 gate.
    CHECK(got == doctest::Approx(data.expected).epsilon(1e-9));
  }
}

TEST_CASE("corpus BLEU is bounded and order-invariant") {
  std::mt19937 rng(606);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e"};
  for (int iteration = 0; iteration < 50; ++iteration) {
    std::uniform_int_distribution<int> sentence_count(1, 5);
    std::uniform_int_distribution<int> length(1, 9);
    std::vector<std::vector<std::string>> hyps;
    std::vector<std::vector<std::string>> refs;
    for (int s = sentence_count(rng); s > 0; --s) {
      std::vector<std::string> hyp;
      std::vector<std::string> ref;
      for (int i = length(rng); i > 0; --i) hyp.push_back(vocab[rng() % 5]);
      for (int i = length(rng); i > 0; --i) ref.push_back(vocab[rng() % 5]);
      hyps.push_back(hyp);
      refs.push_back(ref);
    }
    const double score = corpus_bleu(hyps, refs);
    CHECK(score >= 0.0);
    CHECK(score <= 100.0 + 1e-9);

    std::vector<std::size_t> order(hyps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<std::string>> hyps_shuffled;
    std::vector<std::vector<std::string>> refs_shuffled;
    for (std::size_t i : order) {
      hyps_shuffled.push_back(hyps[i]);
      refs_shuffled.push_back(refs[i]);
    }
    CHECK(corpus_bleu(hyps_shuffled, refs_shuffled) ==
          doctest::Approx(score).epsilon(1e-12));
  }
}

TEST_CASE("hallucination rate on fixtures") {
  SUBCASE("all aligned") {
    AlignmentSet alignment{{{0, 0}, {1, 1}}};
    CHECK(hallucination_rate({{"A", "B"}}, {alignment}) == 0.0);
  }
  SUBCASE("nothing aligned") {
    CHECK(hallucination_rate({{"A", "B"}}, {AlignmentSet{}}) == 1.0);
  }
  SUBCASE("two of ten unaligned across two sentences") {
    AlignmentSet partial{{{0, 0}, {1, 1}, {2, 2}}};  // words 3, 4 unaligned
    AlignmentSet full{{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}};
    double rate = hallucination_rate(
        {{"a", "b", "c", "d", "e"}, {"f", "g", "h", "i", "j"}},
        {partial, full});
    CHECK(rate == doctest::Approx(0.2).epsilon(1e-12));
  }
  SUBCASE("out-of-bounds alignment") {
    AlignmentSet bad{{{0, 5}}};
    CHECK_ERROR_KIND(hallucination_rate({{"A"}}, {bad}),
                     ErrorKind::kInvalidAlignment);
  }
  SUBCASE("count mismatch") {
    CHECK_ERROR_KIND(hallucination_rate({{"A"}}, {}),
                     ErrorKind::kShapeMismatch);
  }
}

TEST_CASE("hallucination rate complements the aligned fraction") {
  std::mt19937 rng(11);
  for (int iteration = 0; iteration < 100; ++iteration) {
    std::uniform_int_distribution<int> sentences(1, 4);
    std::vector<std::vector<std::string>> translations;
    std::vector<AlignmentSet> alignments;
    long long aligned_words = 0;
    long long total_words = 0;
    for (int s = sentences(rng); s > 0; --s) {
      std::uniform_int_distribution<int> length(1, 8);
      const int target_len = length(rng);
      std::vector<std::string> translation;
      AlignmentSet alignment;
      for (int t = 0; t < target_len; ++t) {
        translation.push_back("w" + std::to_string(t));
        if (rng() % 2) {
          alignment.links.push_back({static_cast<int>(rng() % 5), t});
          ++aligned_words;
        }
      }
      total_words += target_len;
      translations.push_back(std::move(translation));
      alignments.push_back(std::move(alignment));
    }
    const double rate = hallucination_rate(translations, alignments);
    const double aligned_fraction =
        total_words == 0 ? 1.0
                         : static_cast<double>(aligned_words) / total_words;
    CHECK(rate + aligned_fraction == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pharaoh alignment parsing") {
  AlignmentSet alignment = parse_pharaoh_line("0-0 1-2 2-1 1-2");
  CHECK(alignment.links.size() == 3);  // duplicate dropped
  CHECK(parse_pharaoh_line("").links.empty());
  CHECK_ERROR_KIND(parse_pharaoh_line("0-0 broken"), ErrorKind::kParseError);
  CHECK_ERROR_KIND(parse_pharaoh_line("1- 2"), ErrorKind::kParseError);
  CHECK_ERROR_KIND(parse_pharaoh_line("-1-2"), ErrorKind::kParseError);
  validate_alignment(alignment, 3, 3);
  CHECK_ERROR_KIND(validate_alignment(alignment, 3, 2),
                   ErrorKind::kInvalidAlignment);
}

TEST_CASE("reorder stats on small cases") {
  CHECK(reorder_stats(AlignmentSet{{{0, 0}, {1, 1}, {2, 2}}}) ==
        ReorderStats{0, 0});
  CHECK(reorder_stats(AlignmentSet{{{0, 1}, {1, 0}}}) == ReorderStats{1, 1});
  CHECK(reorder_stats(AlignmentSet{}) == ReorderStats{0, 0});
}

TEST_CASE("reorder stats equal the quadratic oracle") {
  std::mt19937 rng(52);
  for (int iteration = 0; iteration < 500; ++iteration) {
    std::uniform_int_distribution<int> link_count(0, 15);
    std::uniform_int_distribution<int> index(0, 9);
    AlignmentSet alignment;
    for (int l = link_count(rng); l > 0; --l) {
      alignment.links.push_back({index(rng), index(rng)});
    }
    CHECK(reorder_stats(alignment) ==
          simt_test::brute_force_reorder(alignment));
  }
}

TEST_CASE("difficulty partition sorts and splits into thirds") {
  // Counts (0,0,0,3,4,5,12,13,14) in shuffled positions.
  std::vector<long long> counts = {12, 0, 4, 14, 0, 3, 13, 5, 0};
  std::vector<ReorderStats> stats;
  for (long long count : counts) {
    stats.push_back(ReorderStats{count, count > 0 ? 1 : 0});
  }
  std::vector<Difficulty> labels = difficulty_partition(stats);
  REQUIRE(labels.size() == 9);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Difficulty expected = counts[i] >= 12  ? Difficulty::kHard
                          : counts[i] >= 3 ? Difficulty::kMedium
                                           : Difficulty::kEasy;
    CHECK(labels[i] == expected);
  }
}

TEST_CASE("difficulty partition on sentence pairs") {
  IdentityTokenizer identity;
  std::vector<SentencePair> pairs;
  std::vector<AlignmentSet> alignments;
  pairs.push_back(build_sentence_pair("a b c", "x y z", identity));
  alignments.push_back(AlignmentSet{{{0, 0}, {1, 1}, {2, 2}}});  // monotone
  pairs.push_back(build_sentence_pair("a b c", "x y z", identity));
  alignments.push_back(AlignmentSet{{{0, 1}, {1, 0}}});  // one inversion
  pairs.push_back(build_sentence_pair("a b c", "x y z", identity));
  alignments.push_back(AlignmentSet{{{0, 2}, {1, 1}, {2, 0}}});  // three

  std::vector<Difficulty> labels = difficulty_partition(pairs, alignments);
  CHECK(labels == std::vector<Difficulty>{Difficulty::kEasy,
                                          Difficulty::kMedium,
                                          Difficulty::kHard});

  alignments.pop_back();
  CHECK_ERROR_KIND(difficulty_partition(pairs, alignments),
                   ErrorKind::kIncompleteInput);
  alignments.push_back(AlignmentSet{{{5, 0}}});
  CHECK_ERROR_KIND(difficulty_partition(pairs, alignments),
                   ErrorKind::kInvalidAlignment);
}

TEST_CASE("traces produced by sessions always satisfy policy invariants") {
  std::mt19937 rng(9001);
  for (int iteration = 0; iteration < 100; ++iteration) {
    std::uniform_int_distribution<int> source_dist(1, 9);
    const int source_len = source_dist(rng);
    std::vector<std::string> source;
    for (int j = 0; j < source_len; ++j) {
      source.push_back(simt_test::random_letters(rng, 1 + rng() % 4));
    }
    std::uniform_int_distribution<int> k_dist(1, 6);
    auto agent = waitk_agent(k_dist(rng));
    auto translator = mock_translator({}, 64);
    SessionTrace trace =
        run_session(source, *agent, *translator, "", SessionConfig{});
    CHECK_NOTHROW(validate_trace(trace));
    CHECK_NOTHROW(
        validate_word_policy(trace.realized_policy, trace.source_len()));
  }
}
