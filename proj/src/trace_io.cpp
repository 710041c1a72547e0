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

#include "simt/trace_io.hpp"

#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace simt {

namespace {

using nlohmann::json;

std::string actions_to_string(const std::vector<Action>& actions) {
  std::string text;
  text.reserve(actions.size());
  for (Action a : actions) {
    text.push_back(static_cast<char>(a));
  }
  return text;
}

std::vector<Action> actions_from_string(const std::string& text) {
  std::vector<Action> actions;
  actions.reserve(text.size());
  for (char c : text) {
    if (c != 'R' && c != 'W') {
      raise(ErrorKind::kParseError,
            std::string("unknown action character '") + c + "'");
    }
    actions.push_back(static_cast<Action>(c));
  }
  return actions;
}

}  // namespace

std::string trace_to_json_line(const LineResult& result, std::size_t line) {
  const SessionTrace& trace = result.trace;
  json record{{"line", line},
              {"actions", actions_to_string(trace.actions)},
              {"g", trace.realized_policy.read_counts},
              {"translation", trace.translation},
              {"emission_times_ms", trace.emission_times_ms},
              {"source_arrival_times_ms", trace.source_arrival_times_ms},
              {"warnings", trace.warnings},
              {"error", result.error}};
  return record.dump();
}

void write_traces_jsonl(std::ostream& out,
                        const std::vector<LineResult>& results) {
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << trace_to_json_line(results[i], i) << '\n';
  }
}

void write_traces_jsonl(const std::string& path,
                        const std::vector<LineResult>& results) {
  std::ofstream out(path);
  if (!out) {
    raise(ErrorKind::kIoError, "cannot write " + path);
  }
  write_traces_jsonl(out, results);
}

std::vector<LineResult> read_traces_jsonl(std::istream& in) {
  std::vector<LineResult> results;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) {
      continue;
    }
    json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded()) {
      raise(ErrorKind::kParseError,
            "trace line " + std::to_string(line_number) + " is not JSON");
    }
    try {
      LineResult result;
      result.trace.actions =
          actions_from_string(record.at("actions").get<std::string>());
      result.trace.realized_policy.read_counts =
          record.at("g").get<std::vector<int>>();
      result.trace.translation =
          record.at("translation").get<std::vector<std::string>>();
      result.trace.emission_times_ms =
          record.at("emission_times_ms").get<std::vector<std::int64_t>>();
      result.trace.source_arrival_times_ms =
          record.at("source_arrival_times_ms")
              .get<std::vector<std::int64_t>>();
      result.trace.warnings =
          record.value("warnings", std::vector<std::string>{});
      result.error = record.value("error", std::string{});
      results.push_back(std::move(result));
    } catch (const json::exception& e) {
      raise(ErrorKind::kParseError, "trace line " +
                                        std::to_string(line_number) + ": " +
                                        e.what());
    }
  }
  return results;
}

std::vector<LineResult> read_traces_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::kIoError, "cannot open " + path);
  }
  return read_traces_jsonl(in);
}

}  // namespace simt
