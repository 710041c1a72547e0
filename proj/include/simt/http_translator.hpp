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

#include "simt/translator.hpp"

namespace simt {

enum class Decoding { kGreedy };

// Wire formats the client speaks. kMinimal posts
//   {"prompt": ..., "max_new_tokens": n, "stop": [...]}
// and expects {"text": ..., "stopped": bool}. kCompletions is an adapter for
// completions-style servers: {"model", "prompt", "max_tokens", "stop",
// "temperature": 0} answered by {"choices": [{"text", "finish_reason"}]}.
enum class WireProtocol { kMinimal, kCompletions };

struct HttpTranslatorConfig {
  std::string endpoint;  // e.g. http://127.0.0.1:8080/generate
  PromptTemplate prompt_template = PromptTemplate::default_template();
  Decoding decoding = Decoding::kGreedy;
  WireProtocol protocol = WireProtocol::kMinimal;
  int timeout_ms = 10000;
  int max_new_tokens = 16;
};

// Network client for an LLM inference server. Each call renders the prompt,
// requests a greedy completion and truncates the continuation at the first
// whitespace boundary, returning exactly one new word; a completion with no
// word and the server's stop flag set maps to the end of translation.
// Throws kAgentUnavailable on network failure or timeout and kProtocolError
// on malformed responses. Calls are independent, so concurrent sessions may
// share one agent.
std::unique_ptr<TranslationAgent> http_translator(HttpTranslatorConfig config);

}  // namespace simt
