// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace prda::service {

struct Options {
  std::string host = "127.0.0.1";
  int port = 8080;
  /// Engine threads per request (0 = all cores).
  unsigned workers = 0;
  /// Concurrent HTTP requests.
  unsigned http_threads = 4;
  std::string cors_origin = "*";
  /// Requests simulating more replicates than this are refused with 400.
  double max_replicates = 1e7;
};

/// Reads PRDA_HOST, PRDA_PORT, PRDA_WORKERS, PRDA_HTTP_THREADS and
/// PRDA_CORS_ORIGIN on top of the defaults.
Options options_from_environment();

struct Response {
  int status = 200;
  std::string body;  // JSON
};

/// Stateless request handler; every call computes independently.
class Handler {
 public:
  explicit Handler(Options options) : options_(std::move(options)) {}

  /// POST /prospective, /retrospective, /design-est, /sensitivity,
  /// /interpret and GET /healthz.
  Response handle(std::string_view method, std::string_view path, std::string_view body) const;

  const Options& options() const noexcept { return options_; }

 private:
  Options options_;
};

/// Registers the routes (and CORS handling) on an httplib server.
void mount(httplib::Server& server, const Handler& handler);

}  // namespace prda::service
