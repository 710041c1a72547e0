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

#include <iosfwd>
#include <string>
#include <vector>

#include "simt/session.hpp"

namespace simt {

// Trace files are JSON Lines, one session per line:
//   {"line": 0, "actions": "RWRW", "g": [1, 2], "translation": ["A", "B"],
//    "emission_times_ms": [...], "source_arrival_times_ms": [...],
//    "warnings": [...], "error": ""}
// "error" is non-empty for failed lines, whose other fields hold the partial
// trace.

std::string trace_to_json_line(const LineResult& result, std::size_t line);

void write_traces_jsonl(std::ostream& out,
                        const std::vector<LineResult>& results);
void write_traces_jsonl(const std::string& path,
                        const std::vector<LineResult>& results);

std::vector<LineResult> read_traces_jsonl(std::istream& in);
std::vector<LineResult> read_traces_jsonl(const std::string& path);

}  // namespace simt
