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

#include <memory>
#include <string>

namespace simt {

// In-process inference server for integration tests and demos. It expects
// prompts shaped like the default template, reads the source words from the
// last "Input:" line and the partial translation from the last "Output:"
// line, and continues word for word: the next word is the (|target|+1)-th
// source word, optionally uppercased. When the translation has caught up
// with the revealed source it answers with the stop flag.
//
// Serves the minimal protocol on /generate and a completions-style protocol
// on /v1/completions (see http_translator.hpp for both shapes).
class StubServer {
 public:
  struct Options {
    int port = 0;  // 0 picks a free port
    std::string host = "127.0.0.1";
    bool uppercase = true;
    int delay_ms = 0;  // per-request delay, for timeout tests
  };

  explicit StubServer(Options options);
  ~StubServer();

  StubServer(const StubServer&) = delete;
  StubServer& operator=(const StubServer&) = delete;

  int port() const;
  // Minimal-protocol endpoint, e.g. http://127.0.0.1:4123/generate
  std::string endpoint() const;
  std::string completions_endpoint() const;

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// The continuation the stub produces for one prompt; exposed so tests can
// drive the protocol logic without sockets. Returns {text, stopped}.
std::pair<std::string, bool> stub_continuation(const std::string& prompt,
                                               bool uppercase);

}  // namespace simt
