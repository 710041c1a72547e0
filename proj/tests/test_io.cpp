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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "simt/policy.hpp"
#include "simt/policy_io.hpp"
#include "simt/session.hpp"
#include "simt/trace_io.hpp"
#include "support/test_util.hpp"

using namespace simt;

TEST_CASE("trace JSONL round-trips") {
  auto policy = waitk_agent(1);
  auto translator = mock_translator({{"a", "A"}, {"b", "B"}}, 4);
  std::vector<std::vector<std::string>> sources = {{"a", "b"}, {"b"}};
  PolicyFactory factory = [](std::size_t) { return waitk_agent(1); };
  auto results = run_corpus(sources, factory, *translator, "",
                            SessionConfig{}, 1);

  std::ostringstream out;
  write_traces_jsonl(out, results);
  std::istringstream in(out.str());
  auto loaded = read_traces_jsonl(in);

  REQUIRE(loaded.size() == results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(loaded[i].trace.translation == results[i].trace.translation);
    CHECK(loaded[i].trace.realized_policy.read_counts ==
          results[i].trace.realized_policy.read_counts);
    CHECK(loaded[i].trace.actions == results[i].trace.actions);
    CHECK(loaded[i].trace.source_arrival_times_ms ==
          results[i].trace.source_arrival_times_ms);
    CHECK(loaded[i].error == results[i].error);
    CHECK_NOTHROW(validate_trace(loaded[i].trace));
  }
}

TEST_CASE("trace reader rejects garbage") {
  std::istringstream not_json("this is not json\n");
  CHECK_ERROR_KIND(read_traces_jsonl(not_json), ErrorKind::kParseError);
  std::istringstream missing_fields("{\"actions\": \"RW\"}\n");
  CHECK_ERROR_KIND(read_traces_jsonl(missing_fields), ErrorKind::kParseError);
  std::istringstream bad_action(
      "{\"actions\":\"RX\",\"g\":[1],\"translation\":[\"a\"],"
      "\"emission_times_ms\":[0],\"source_arrival_times_ms\":[0],"
      "\"warnings\":[],\"error\":\"\"}\n");
  CHECK_ERROR_KIND(read_traces_jsonl(bad_action), ErrorKind::kParseError);
}

TEST_CASE("token policy records parse and convert") {
  const std::string line =
      R"({"source_tokens": ["a", "b", "c"], "target_tokens": ["x"],)"
      R"( "source_boundaries": [1, 0, 1], "target_boundaries": [1],)"
      R"( "h": [2]})";
  TokenPolicyRecord record = parse_token_policy_line(line);
  CHECK(record.pair.source_words == std::vector<std::string>{"a", "bc"});
  CHECK(record.pair.target_words == std::vector<std::string>{"x"});
  WordLevelPolicy converted =
      token_to_word_policy(record.pair, record.policy);
  CHECK(converted.read_counts == std::vector<int>{2});
}

TEST_CASE("token policy parser flags malformed lines") {
  CHECK_ERROR_KIND(parse_token_policy_line("[1,2,3]"), ErrorKind::kParseError);
  CHECK_ERROR_KIND(parse_token_policy_line("{\"source_tokens\": [\"a\"]}"),
                   ErrorKind::kParseError);
  CHECK_ERROR_KIND(
      parse_token_policy_line(
          R"({"source_tokens": ["a", "b"], "target_tokens": ["x"],)"
          R"( "source_boundaries": [1], "target_boundaries": [1], "h": [1]})"),
      ErrorKind::kShapeMismatch);
}

TEST_CASE("tokens after the last word boundary belong to no word") {
  // External tokenizations may append an end marker; it is carried along but
  // never counts as a word, and the conversion ignores the marker's entry.
  const std::string line =
      R"({"source_tokens": ["a", "b", "</s>"], "target_tokens": ["x", "</s>"],)"
      R"( "source_boundaries": [1, 1, 0], "target_boundaries": [1, 0],)"
      R"( "h": [1, 3]})";
  TokenPolicyRecord record = parse_token_policy_line(line);
  CHECK(record.pair.source_words == std::vector<std::string>{"a", "b"});
  CHECK(record.pair.target_words == std::vector<std::string>{"x"});
  WordLevelPolicy converted = token_to_word_policy(record.pair, record.policy);
  CHECK(converted.read_counts == std::vector<int>{2});  // u=1 at h=1, min(2,2)
}

TEST_CASE("token policy files drive sessions end to end") {
  const std::string path = "/tmp/simt_tokenfile_test.jsonl";
  {
    std::ofstream out(path);
    out << R"({"source_tokens": ["das", "al", "te", "haus"],)"
        << R"( "target_tokens": ["THE", "OLD", "HOUSE"],)"
        << R"( "source_boundaries": [1, 0, 1, 1],)"
        << R"( "target_boundaries": [1, 1, 1], "h": [1, 3, 4]})" << "\n";
  }
  auto records = read_token_policy_file(path);
  REQUIRE(records.size() == 1);
  WordLevelPolicy policy =
      token_to_word_policy(records[0].pair, records[0].policy);
  CHECK(policy.read_counts == std::vector<int>{2, 3, 3});
  policy = apply_boundary(policy, BoundaryConfig{1, 3},
                          records[0].pair.source_len());
  CHECK(policy.read_counts == std::vector<int>{2, 3, 3});

  auto agent = scripted_agent(policy, records[0].pair.source_len());
  auto translator = mock_translator({}, 3);
  SessionTrace trace = run_session(records[0].pair.source_words, *agent,
                                   *translator, "", SessionConfig{});
  CHECK(trace.realized_policy.read_counts == policy.read_counts);
  CHECK(trace.translation == records[0].pair.source_words);
  std::remove(path.c_str());
}

TEST_CASE("word policy files round-trip") {
  WordLevelPolicy policy{{1, 2, 2, 5}};
  std::string line = word_policy_to_json_line(policy);
  CHECK(parse_word_policy_line(line).read_counts == policy.read_counts);
  CHECK_ERROR_KIND(parse_word_policy_line("{}"), ErrorKind::kParseError);
  CHECK_ERROR_KIND(parse_word_policy_line("{\"g\": \"nope\"}"),
                   ErrorKind::kParseError);
}
