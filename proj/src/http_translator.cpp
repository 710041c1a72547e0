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

#include "simt/http_translator.hpp"

#include <cctype>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace simt {

namespace {

using nlohmann::json;

struct SplitUrl {
  std::string base;  // scheme://host:port
  std::string path;
};

SplitUrl split_url(const std::string& endpoint) {
  std::size_t scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    raise(ErrorKind::kInvalidParameter,
          "endpoint must start with http:// or https://: " + endpoint);
  }
  std::size_t path_start = endpoint.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {endpoint, "/"};
  }
  return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

// First whitespace-delimited word of the continuation, or empty.
std::string first_word(const std::string& text) {
  std::size_t begin = 0;
  while (begin < text.size() &&
         std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  std::size_t end = begin;
  while (end < text.size() &&
         !std::isspace(static_cast<unsigned char>(text[end]))) {
    ++end;
  }
  return text.substr(begin, end - begin);
}

class HttpTranslator final : public TranslationAgent {
 public:
  explicit HttpTranslator(HttpTranslatorConfig config)
      : config_(std::move(config)), url_(split_url(config_.endpoint)) {}

  NextWord next_word(const std::string& instruction,
                     const std::vector<std::string>& source_prefix,
                     const std::vector<std::string>& target_prefix) override {
    const std::string prompt =
        config_.prompt_template.render(instruction, source_prefix,
                                       target_prefix);
    auto [text, stopped] = request_completion(prompt);
    std::string word = first_word(text);
    if (word.empty()) {
      if (stopped) {
        return NextWord::end();
      }
      raise(ErrorKind::kProtocolError,
            "server returned no word and no stop flag");
    }
    return NextWord::of(std::move(word));
  }

 private:
  std::pair<std::string, bool> request_completion(const std::string& prompt) {
    json request;
    if (config_.protocol == WireProtocol::kMinimal) {
      request = {{"prompt", prompt},
                 {"max_new_tokens", config_.max_new_tokens},
                 {"stop", json::array({" ", "\n"})}};
    } else {
      request = {{"model", "default"},
                 {"prompt", prompt},
                 {"max_tokens", config_.max_new_tokens},
                 {"temperature", 0},
                 {"stop", json::array({" ", "\n"})}};
    }

    // One client per call: no shared connection state between sessions.
    httplib::Client client(url_.base);
    const time_t sec = config_.timeout_ms / 1000;
    const time_t usec = (config_.timeout_ms % 1000) * 1000;
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_write_timeout(sec, usec);

    httplib::Result result =
        client.Post(url_.path, request.dump(), "application/json");
    if (!result) {
      raise(ErrorKind::kAgentUnavailable,
            "request to " + config_.endpoint + " failed: " +
                httplib::to_string(result.error()));
    }
    if (result->status != 200) {
      raise(ErrorKind::kProtocolError,
            "server answered status " + std::to_string(result->status));
    }
    return parse_response(result->body);
  }

  std::pair<std::string, bool> parse_response(const std::string& body) const {
    json response = json::parse(body, nullptr, /*allow_exceptions=*/false);
    if (response.is_discarded()) {
      raise(ErrorKind::kProtocolError, "response is not valid JSON");
    }
    try {
      if (config_.protocol == WireProtocol::kMinimal) {
        return {response.at("text").get<std::string>(),
                response.at("stopped").get<bool>()};
      }
      const json& choice = response.at("choices").at(0);
      return {choice.at("text").get<std::string>(),
              choice.at("finish_reason").get<std::string>() == "stop"};
    } catch (const json::exception& e) {
      raise(ErrorKind::kProtocolError,
            std::string("response missing fields: ") + e.what());
    }
  }

  HttpTranslatorConfig config_;
  SplitUrl url_;
};

}  // namespace

std::unique_ptr<TranslationAgent> http_translator(HttpTranslatorConfig config) {
  if (config.timeout_ms < 1 || config.max_new_tokens < 1) {
    raise(ErrorKind::kInvalidParameter,
          "timeout_ms and max_new_tokens must be >= 1");
  }
  return std::make_unique<HttpTranslator>(std::move(config));
}

}  // namespace simt
