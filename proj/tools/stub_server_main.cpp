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

#include <CLI11.hpp>

#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "simt/stub_server.hpp"
#include "simt/types.hpp"

namespace {

volatile std::sig_atomic_t interrupted = 0;

void handle_signal(int) { interrupted = 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-for-word stub inference server for demos and tests"};
  simt::StubServer::Options options;
  options.port = 8080;
  bool plain = false;
  int delay_ms = 0;
  app.add_option("--port", options.port, "Port to listen on (0 = pick one)");
  app.add_option("--host", options.host, "Bind address");
  app.add_flag("--plain", plain, "Echo source words instead of uppercasing");
  app.add_option("--delay-ms", delay_ms, "Artificial per-request delay");
  CLI11_PARSE(app, argc, argv);
  options.uppercase = !plain;
  options.delay_ms = delay_ms;

  try {
    simt::StubServer server(options);
    std::cerr << "stub server listening on " << server.endpoint() << "\n"
              << "completions endpoint at " << server.completions_endpoint()
              << "\n";
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    while (!interrupted) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    server.stop();
  } catch (const simt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
