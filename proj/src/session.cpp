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

#include "simt/session.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <thread>

namespace simt {

std::int64_t SteadyClock::now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void SteadyClock::wait_until_ms(std::int64_t instant) {
  std::int64_t now = now_ms();
  if (instant > now) {
    std::this_thread::sleep_for(std::chrono::milliseconds(instant - now));
  }
}

namespace {

bool has_whitespace(const std::string& word) {
  for (char c : word) {
    if (std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

}  // namespace

SessionTrace run_session(const std::vector<std::string>& source_words,
                         PolicyAgent& policy_agent,
                         TranslationAgent& translation_agent,
                         const std::string& instruction,
                         const SessionConfig& config, Clock* clock) {
  if (source_words.empty()) {
    raise(ErrorKind::kEmptyInput, "session needs a non-empty source");
  }
  if (config.max_target_words < 0 || config.source_arrival_interval_ms < 0) {
    raise(ErrorKind::kInvalidParameter,
          "max_target_words and arrival interval must be >= 0");
  }
  const int source_len = static_cast<int>(source_words.size());
  const int max_target_words = config.max_target_words > 0
                                   ? config.max_target_words
                                   : 2 * source_len + 10;

  SteadyClock fallback_clock;
  Clock& time = clock ? *clock : fallback_clock;
  const std::int64_t origin = time.now_ms();

  SessionTrace trace;
  trace.source_arrival_times_ms.reserve(source_words.size());
  for (int j = 1; j <= source_len; ++j) {
    trace.source_arrival_times_ms.push_back(j *
                                            config.source_arrival_interval_ms);
  }

  Memory memory(instruction);
  int reads = 0;
  int writes = 0;
  bool end_marker_seen = false;

  const int step_limit = source_len + max_target_words + 1;
  int steps = 0;
  while (true) {
    if (++steps > step_limit) {
      throw SessionAborted(ErrorKind::kNonProgressingAgent,
                           "session exceeded " + std::to_string(step_limit) +
                               " cycles without terminating",
                           std::move(trace));
    }
    const bool exhausted = reads == source_len;
    Action action = Action::kWrite;
    if (!exhausted) {
      action = policy_agent.decide(MemoryView{reads, writes, false});
    }
    // With the source exhausted the decision is forced to WRITE here, the
    // single enforcement point; agents need not handle that state.

    if (action == Action::kRead) {
      time.wait_until_ms(origin + trace.source_arrival_times_ms[reads]);
      memory.push_source(source_words[reads]);
      ++reads;
      trace.actions.push_back(Action::kRead);
      continue;
    }

    NextWord next;
    try {
      next = translation_agent.next_word(instruction, memory.source_read(),
                                         memory.target_generated());
    } catch (const Error& e) {
      throw SessionAborted(e.kind(), e.what(), std::move(trace));
    }
    if (next.end_of_translation) {
      memory.finish();
      end_marker_seen = true;
      if (reads == 0) {
        trace.warnings.push_back(
            "end of translation before any source word was read");
      }
      break;
    }
    if (next.word.empty() || has_whitespace(next.word)) {
      throw SessionAborted(
          ErrorKind::kProtocolError,
          "translation agent returned an empty or multi-word result",
          std::move(trace));
    }
    memory.push_target(next.word);
    ++writes;
    trace.actions.push_back(Action::kWrite);
    trace.realized_policy.read_counts.push_back(reads);
    trace.emission_times_ms.push_back(time.now_ms() - origin);
    trace.translation.push_back(next.word);
    if (writes >= max_target_words) {
      break;
    }
  }

  if (!end_marker_seen) {
    trace.warnings.push_back("target word cap reached before end marker");
  }
  try {
    validate_trace(trace);
  } catch (const Error& e) {
    // A write before any read leaves an unrealizable policy in the trace.
    throw SessionAborted(e.kind(), e.what(), std::move(trace));
  }
  return trace;
}

std::vector<LineResult> run_corpus(
    const std::vector<std::vector<std::string>>& sources,
    const PolicyFactory& policy_factory, TranslationAgent& translation_agent,
    const std::string& instruction, const SessionConfig& config,
    int parallelism, Clock* clock) {
  if (parallelism < 1) {
    raise(ErrorKind::kInvalidParameter, "parallelism must be >= 1");
  }
  std::vector<LineResult> results(sources.size());
  if (sources.empty()) {
    return results;
  }

  std::atomic<std::size_t> next_line{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    while (true) {
      std::size_t line = next_line.fetch_add(1);
      if (line >= sources.size() || abort.load()) {
        return;
      }
      LineResult& result = results[line];
      try {
        std::unique_ptr<PolicyAgent> agent = policy_factory(line);
        result.trace = run_session(sources[line], *agent, translation_agent,
                                   instruction, config, clock);
      } catch (const SessionAborted& e) {
        result.trace = e.partial_trace();
        result.error = e.what();
        if (config.abort_on_agent_error) abort.store(true);
      } catch (const Error& e) {
        result.error = e.what();
        if (config.abort_on_agent_error) abort.store(true);
      }
    }
  };

  const int workers =
      std::min<int>(parallelism, static_cast<int>(sources.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) {
    t.join();
  }

  if (config.abort_on_agent_error) {
    for (const LineResult& result : results) {
      if (!result.ok()) {
        raise(ErrorKind::kAgentUnavailable,
              "corpus run aborted: " + result.error);
      }
    }
  }
  return results;
}

}  // namespace simt
