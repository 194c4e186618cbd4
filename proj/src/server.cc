// Copyright 2026 The fieldmon Authors.
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

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "fieldmon/api.h"
#include "fieldmon/text.h"
#include "httplib.h"

namespace fieldmon {

namespace {

std::atomic<int> pending_signal{0};

extern "C" void OnSignal(int sig) { pending_signal.store(sig); }

void InstallHandlers() {
  struct sigaction action {};
  action.sa_handler = OnSignal;
  sigemptyset(&action.sa_mask);
  for (int sig : {SIGHUP, SIGINT, SIGTERM}) sigaction(sig, &action, nullptr);
}

}  // namespace

std::pair<std::string, int> ParseBindAddress(std::string_view bind) {
  std::string_view host = "127.0.0.1";
  std::string_view port = bind;
  size_t colon = bind.rfind(':');
  if (colon != std::string_view::npos) {
    host = bind.substr(0, colon);
    port = bind.substr(colon + 1);
    if (host.size() >= 2 && host.front() == '[' && host.back() == ']') {
      host = host.substr(1, host.size() - 2);
    }
  }
  std::optional<long long> number = ParseInteger(port);
  if (host.empty() || !number || *number < 0 || *number > 65535) {
    throw std::invalid_argument("invalid bind address '" + std::string(bind) + "'");
  }
  return {std::string(host), static_cast<int>(*number)};
}

void Serve(ApiService &service, const ServerOptions &options) {
  auto [host, port] = ParseBindAddress(options.bind);
  httplib::Server server;
  server.Get(R"(/api/.*)", [&service](const httplib::Request &req, httplib::Response &res) {
    ParamMap params;
    // First occurrence wins for repeated parameters.
    for (const auto &[key, value] : req.params) params.emplace(key, value);
    ApiResponse r = service.Handle(req.path, params);
    res.status = r.status;
    for (const auto &[name, value] : r.headers) res.set_header(name, value);
    res.set_content(r.body, r.content_type);
  });
  if (options.static_dir && !server.set_mount_point("/", *options.static_dir)) {
    throw std::runtime_error("static directory not found: " + *options.static_dir);
  }

  if (port == 0) {
    port = server.bind_to_any_port(host);
    if (port < 0) throw std::runtime_error("cannot bind to " + options.bind);
  } else if (!server.bind_to_port(host, port)) {
    throw std::runtime_error("cannot bind to " + options.bind);
  }
  std::cerr << "listening on " << host << ":" << port << " snapshot "
            << service.store().Get()->id << "\n";
  if (options.on_listening) options.on_listening(port);

  InstallHandlers();
  std::atomic<bool> done{false};
  std::thread watcher([&] {
    while (!done.load()) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      if (options.stop != nullptr && options.stop->load()) {
        server.stop();
        return;
      }
      int sig = pending_signal.exchange(0);
      if (sig == SIGHUP && options.corpus_path) {
        try {
          auto next = LoadSnapshot(*options.corpus_path);
          service.store().Publish(next);
          std::cerr << "reloaded snapshot " << next->id << "\n";
        } catch (const std::exception &e) {
          std::cerr << "reload failed, keeping current snapshot: " << e.what() << "\n";
        }
      } else if (sig == SIGINT || sig == SIGTERM) {
        server.stop();
        return;
      }
    }
  });
  server.listen_after_bind();
  done.store(true);
  watcher.join();
}

}  // namespace fieldmon
