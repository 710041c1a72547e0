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

#include "simt/stub_server.hpp"

#include <cctype>
#include <chrono>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "simt/corpus.hpp"
#include "simt/types.hpp"

namespace simt {

namespace {

using nlohmann::json;

// Words after the last occurrence of `label` in the prompt, up to the end of
// that line. Returns false when the label is absent.
bool words_after_label(const std::string& prompt, const std::string& label,
                       std::vector<std::string>* words) {
  std::size_t pos = prompt.rfind(label);
  if (pos == std::string::npos) {
    return false;
  }
  std::size_t begin = pos + label.size();
  std::size_t end = prompt.find('\n', begin);
  if (end == std::string::npos) {
    end = prompt.size();
  }
  *words = split_words(prompt.substr(begin, end - begin));
  return true;
}

std::string ascii_upper(std::string word) {
  for (char& c : word) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return word;
}

}  // namespace

std::pair<std::string, bool> stub_continuation(const std::string& prompt,
                                               bool uppercase) {
  std::vector<std::string> source;
  std::vector<std::string> target;
  if (!words_after_label(prompt, "Input:", &source)) {
    raise(ErrorKind::kParseError, "prompt has no Input: line");
  }
  if (!words_after_label(prompt, "Output:", &target)) {
    raise(ErrorKind::kParseError, "prompt has no Output: line");
  }
  if (target.size() >= source.size()) {
    return {"", true};
  }
  std::string word = source[target.size()];
  if (uppercase) {
    word = ascii_upper(std::move(word));
  }
  // A real continuation starts with the separator after the prompt text.
  return {" " + word, false};
}

struct StubServer::Impl {
  Options options;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  void answer(const std::string& prompt, bool completions_shape,
              httplib::Response& res) {
    if (options.delay_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(options.delay_ms));
    }
    auto [text, stopped] = stub_continuation(prompt, options.uppercase);
    json body;
    if (completions_shape) {
      body = {{"choices",
               json::array({{{"text", text},
                             {"finish_reason", stopped ? "stop" : "length"}}})}};
    } else {
      body = {{"text", text}, {"stopped", stopped}};
    }
    res.set_content(body.dump(), "application/json");
  }

  void handle(const httplib::Request& req, httplib::Response& res,
              bool completions_shape) {
    json request = json::parse(req.body, nullptr, /*allow_exceptions=*/false);
    if (request.is_discarded() || !request.contains("prompt")) {
      res.status = 400;
      res.set_content("{\"error\":\"bad request\"}", "application/json");
      return;
    }
    try {
      answer(request["prompt"].get<std::string>(), completions_shape, res);
    } catch (const Error&) {
      res.status = 400;
      res.set_content("{\"error\":\"unrecognized prompt shape\"}",
                      "application/json");
    }
  }
};

StubServer::StubServer(Options options) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
  impl_->server.Post("/generate",
                     [this](const httplib::Request& req, httplib::Response& res) {
                       impl_->handle(req, res, /*completions_shape=*/false);
                     });
  impl_->server.Post("/v1/completions",
                     [this](const httplib::Request& req, httplib::Response& res) {
                       impl_->handle(req, res, /*completions_shape=*/true);
                     });
  if (options.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(options.host);
  } else {
    impl_->port = options.port;
    if (!impl_->server.bind_to_port(options.host, options.port)) {
      raise(ErrorKind::kIoError,
            "cannot bind stub server to port " + std::to_string(options.port));
    }
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

StubServer::~StubServer() { stop(); }

int StubServer::port() const { return impl_->port; }

std::string StubServer::endpoint() const {
  return "http://" + impl_->options.host + ":" + std::to_string(impl_->port) +
         "/generate";
}

std::string StubServer::completions_endpoint() const {
  return "http://" + impl_->options.host + ":" + std::to_string(impl_->port) +
         "/v1/completions";
}

void StubServer::stop() {
  if (impl_->server.is_running()) {
    impl_->server.stop();
  }
  if (impl_->thread.joinable()) {
    impl_->thread.join();
  }
}

}  // namespace simt
