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

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "simt/policy.hpp"
#include "simt/translator.hpp"
#include "simt/types.hpp"

namespace simt {

// Time source for sessions. Sessions only ever compare instants taken from
// the same clock, so the epoch is arbitrary.
class Clock {
 public:
  virtual ~Clock() = default;

  virtual std::int64_t now_ms() = 0;
  virtual void wait_until_ms(std::int64_t instant) = 0;
};

// Monotonic wall clock; wait_until_ms sleeps.
class SteadyClock final : public Clock {
 public:
  std::int64_t now_ms() override;
  void wait_until_ms(std::int64_t instant) override;
};

// Test clock: waiting jumps time forward, nothing sleeps. Confine one
// instance to one session; concurrent sessions would race on it.
class ManualClock final : public Clock {
 public:
  std::int64_t now_ms() override { return now_; }
  void wait_until_ms(std::int64_t instant) override {
    if (instant > now_) now_ = instant;
  }
  void advance_ms(std::int64_t delta) { now_ += delta; }

 private:
  std::int64_t now_ = 0;
};

struct SessionConfig {
  // 0 derives the cap 2 * source length + 10; output is never unbounded.
  int max_target_words = 0;
  // Simulated streaming: source word j arrives j * interval ms after session
  // start. 0 makes the whole source available immediately.
  std::int64_t source_arrival_interval_ms = 0;
  // When true, the first failing session aborts a corpus run; otherwise
  // failures are recorded per line and the remaining lines still run.
  bool abort_on_agent_error = false;
};

// Thrown when a session dies mid-run; carries whatever the session had
// recorded up to the failure.
class SessionAborted : public Error {
 public:
  SessionAborted(ErrorKind kind, const std::string& what, SessionTrace partial)
      : Error(kind, what), partial_(std::move(partial)) {}

  const SessionTrace& partial_trace() const { return partial_; }

 private:
  SessionTrace partial_;
};

// Runs one working cycle loop over the given source: ask the policy agent,
// then either read the next source word into memory (waiting for its
// simulated arrival) or have the translation agent generate the next target
// word from the memory contents. Once the source is exhausted every decision
// is forced to WRITE. Ends on the translator's end marker or at the target
// word cap. The returned trace satisfies validate_trace.
SessionTrace run_session(const std::vector<std::string>& source_words,
                         PolicyAgent& policy_agent,
                         TranslationAgent& translation_agent,
                         const std::string& instruction,
                         const SessionConfig& config, Clock* clock = nullptr);

struct LineResult {
  SessionTrace trace;  // complete on success, partial on failure
  std::string error;   // empty on success

  bool ok() const { return error.empty(); }
};

// Builds the policy agent for one corpus line. Called once per line;
// scripted agents are per-line by construction.
using PolicyFactory =
    std::function<std::unique_ptr<PolicyAgent>(std::size_t line_index)>;

// Runs sessions for all lines with up to `parallelism` of them in flight.
// Results come back in input order regardless of completion order. The
// translation agent is shared across workers.
std::vector<LineResult> run_corpus(
    const std::vector<std::vector<std::string>>& sources,
    const PolicyFactory& policy_factory, TranslationAgent& translation_agent,
    const std::string& instruction, const SessionConfig& config,
    int parallelism, Clock* clock = nullptr);

}  // namespace simt
