// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

// prda-server: HTTP/JSON front end for the design-analysis engine.

#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "service.hpp"

int main(int argc, char** argv) {
  prda::service::Options options = prda::service::options_from_environment();

  CLI::App app{"HTTP/JSON service for prospective and retrospective design analysis"};
  app.add_option("--host", options.host, "bind address (env PRDA_HOST)")->capture_default_str();
  app.add_option("--port", options.port, "port (env PRDA_PORT)")->capture_default_str();
  app.add_option("--workers", options.workers, "engine threads per request, 0 = all cores")
      ->capture_default_str();
  app.add_option("--http-threads", options.http_threads, "concurrent requests")
      ->capture_default_str();
  app.add_option("--cors-origin", options.cors_origin, "allowed browser origin")
      ->capture_default_str();
  app.add_option("--max-replicates", options.max_replicates, "per-request simulation cap")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const prda::service::Handler handler(options);
  httplib::Server server;
  const unsigned threads = options.http_threads == 0 ? 1 : options.http_threads;
  server.new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
  prda::service::mount(server, handler);

  std::cerr << "prda-server listening on " << options.host << ':' << options.port << '\n';
  if (!server.listen(options.host, options.port)) {
    std::cerr << "prda-server: cannot bind " << options.host << ':' << options.port << '\n';
    return 1;
  }
  return 0;
}
