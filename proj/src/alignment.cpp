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

#include "simt/alignment.hpp"

#include <algorithm>
#include <charconv>

#include "simt/corpus.hpp"
#include "simt/types.hpp"

namespace simt {

namespace {

int parse_index(const std::string& token, std::size_t begin, std::size_t end) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data() + begin, token.data() + end, value);
  if (ec != std::errc{} || ptr != token.data() + end || value < 0) {
    raise(ErrorKind::kParseError, "bad alignment token '" + token + "'");
  }
  return value;
}

// Fenwick tree counting inserted source indices.
class Fenwick {
 public:
  explicit Fenwick(int size) : tree_(size + 1, 0) {}

  void add(int index) {
    for (int i = index + 1; i < static_cast<int>(tree_.size()); i += i & -i) {
      ++tree_[i];
    }
  }

  // Number of inserted values <= index.
  int count_through(int index) const {
    int total = 0;
    for (int i = index + 1; i > 0; i -= i & -i) {
      total += tree_[i];
    }
    return total;
  }

 private:
  std::vector<int> tree_;
};

}  // namespace

AlignmentSet parse_pharaoh_line(const std::string& line) {
  AlignmentSet alignment;
  for (const std::string& token : split_words(line)) {
    std::size_t dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
      raise(ErrorKind::kParseError, "bad alignment token '" + token + "'");
    }
    alignment.links.push_back(AlignmentLink{
        parse_index(token, 0, dash), parse_index(token, dash + 1, token.size())});
  }
  std::sort(alignment.links.begin(), alignment.links.end(),
            [](const AlignmentLink& a, const AlignmentLink& b) {
              return std::tie(a.source, a.target) < std::tie(b.source, b.target);
            });
  alignment.links.erase(
      std::unique(alignment.links.begin(), alignment.links.end()),
      alignment.links.end());
  return alignment;
}

std::vector<AlignmentSet> read_pharaoh_file(const std::string& path) {
  std::vector<AlignmentSet> alignments;
  for (const std::string& line : read_lines(path)) {
    alignments.push_back(parse_pharaoh_line(line));
  }
  return alignments;
}

void validate_alignment(const AlignmentSet& alignment, int source_len,
                        int target_len) {
  for (const AlignmentLink& link : alignment.links) {
    if (link.source < 0 || link.source >= source_len || link.target < 0 ||
        link.target >= target_len) {
      raise(ErrorKind::kInvalidAlignment,
            "link " + std::to_string(link.source) + "-" +
                std::to_string(link.target) + " outside " +
                std::to_string(source_len) + "x" + std::to_string(target_len));
    }
  }
}

ReorderStats reorder_stats(const AlignmentSet& alignment) {
  ReorderStats stats;
  if (alignment.links.empty()) {
    return stats;
  }
  std::vector<AlignmentLink> links = alignment.links;
  std::sort(links.begin(), links.end(),
            [](const AlignmentLink& a, const AlignmentLink& b) {
              return std::tie(a.target, a.source) < std::tie(b.target, b.source);
            });
  int max_source = 0;
  for (const AlignmentLink& link : links) {
    max_source = std::max(max_source, link.source);
  }

  Fenwick inserted(max_source + 1);
  int inserted_count = 0;
  int running_max_source = -1;  // over links of strictly earlier targets
  std::size_t i = 0;
  while (i < links.size()) {
    std::size_t group_end = i;
    while (group_end < links.size() &&
           links[group_end].target == links[i].target) {
      ++group_end;
    }
    // Count against earlier targets only: query the whole group before
    // inserting any of it, so links sharing a target never pair up.
    for (std::size_t k = i; k < group_end; ++k) {
      const int s = links[k].source;
      stats.non_monotonic += inserted_count - inserted.count_through(s);
      if (running_max_source > s) {
        stats.max_distance = std::max(stats.max_distance,
                                      running_max_source - s);
      }
    }
    for (std::size_t k = i; k < group_end; ++k) {
      inserted.add(links[k].source);
      ++inserted_count;
      running_max_source = std::max(running_max_source, links[k].source);
    }
    i = group_end;
  }
  return stats;
}

}  // namespace simt
