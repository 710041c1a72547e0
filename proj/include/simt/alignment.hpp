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

namespace simt {

// One word-alignment link, 0-indexed on both sides.
struct AlignmentLink {
  int source = 0;
  int target = 0;

  friend bool operator==(const AlignmentLink&, const AlignmentLink&) = default;
};

// Set of links for one sentence pair; kept sorted by (source, target) with
// duplicates removed when parsed.
struct AlignmentSet {
  std::vector<AlignmentLink> links;
};

// Pharaoh format: whitespace-separated "s-t" pairs, one sentence per line.
// An empty line is a sentence with no links. Throws kParseError on anything
// else.
AlignmentSet parse_pharaoh_line(const std::string& line);
std::vector<AlignmentSet> read_pharaoh_file(const std::string& path);

// Throws kInvalidAlignment when a link falls outside (source_len, target_len).
void validate_alignment(const AlignmentSet& alignment, int source_len,
                        int target_len);

// Reordering summary of one alignment set: the number of non-monotonic link
// pairs ((s,t),(s',t') with t<t' but s>s') and the largest source-index gap
// s-s' over those pairs.
struct ReorderStats {
  long long non_monotonic = 0;
  int max_distance = 0;

  friend bool operator==(const ReorderStats&, const ReorderStats&) = default;
};

// O(n log n) sweep in target order with a Fenwick tree over source indices.
// (Tests cross-check it against the quadratic definition.)
ReorderStats reorder_stats(const AlignmentSet& alignment);

}  // namespace simt
