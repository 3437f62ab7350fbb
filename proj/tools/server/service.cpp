// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "service.hpp"

#include <chrono>
#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "prda/scenario.hpp"

namespace prda::service {
namespace {

using nlohmann::json;

Response error_response(int status, json error) {
  return {status, json{{"status", "error"}, {"error", std::move(error)}}.dump()};
}

Response invalid(const std::vector<FieldError>& errors, const std::string& message) {
  json fields = json::array();
  for (const auto& e : errors) fields.push_back({{"field", e.field}, {"message", e.message}});
  return error_response(400, {{"code", "invalid-parameter"}, {"message", message}, {"fields", fields}});
}

template <typename T>
void env_override(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return;
  if constexpr (std::is_same_v<T, std::string>) {
    target = raw;
  } else {
    try {
      target = static_cast<T>(std::stoul(raw));
    } catch (const std::exception&) {
    }
  }
}

}  // namespace

Options options_from_environment() {
  Options o;
  env_override("PRDA_HOST", o.host);
  env_override("PRDA_PORT", o.port);
  env_override("PRDA_WORKERS", o.workers);
  env_override("PRDA_HTTP_THREADS", o.http_threads);
  env_override("PRDA_CORS_ORIGIN", o.cors_origin);
  return o;
}

Response Handler::handle(std::string_view method, std::string_view path,
                         std::string_view body) const {
  if (path == "/healthz") {
    if (method != "GET") return error_response(405, {{"code", "method-not-allowed"}});
    return {200, R"({"status":"ok"})"};
  }
  if (path.empty() || path.front() != '/') {
    return error_response(404, {{"code", "not-found"}});
  }
  const auto command = parse_command(path.substr(1));
  if (!command) return error_response(404, {{"code", "not-found"}, {"message", std::string(path)}});
  if (method != "POST") return error_response(405, {{"code", "method-not-allowed"}});

  json parsed;
  try {
    parsed = json::parse(body.empty() ? std::string_view("{}") : body);
  } catch (const json::parse_error& e) {
    return error_response(400, {{"code", "malformed-json"}, {"message", e.what()}});
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const ScenarioRequest request = parse_request(*command, parsed);
    if (simulation_cost(request) > options_.max_replicates) {
      return invalid({{"B", "request exceeds the per-request simulation cap"}},
                     "simulation size exceeds the service limit");
    }
    const ScenarioReport report = run_scenario(request, {options_.workers});
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    json envelope;
    envelope["request"] = request_to_json(report.request);
    envelope["seed"] = report.request.seed ? json(*report.request.seed) : json(nullptr);
    envelope["status"] = "done";
    envelope["result"] = report.result;
    envelope["timing_ms"] = ms;
    return {200, envelope.dump()};
  } catch (const RequestError& e) {
    return invalid(e.errors(), e.what());
  } catch (const InvalidParameter& e) {
    return invalid({{e.field(), e.detail()}}, e.what());
  } catch (const UnreachablePower& e) {
    return error_response(422, {{"code", "unreachable-power"},
                                {"message", e.what()},
                                {"n", e.n_upper()},
                                {"achievedPower", e.achieved_power()},
                                {"targetPower", e.target_power()}});
  } catch (const std::exception& e) {
    return error_response(500, {{"code", "internal"}, {"message", e.what()}});
  }
}

void mount(httplib::Server& server, const Handler& handler) {
  const std::string origin = handler.options().cors_origin;
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  auto route = [&handler](const httplib::Request& req, httplib::Response& res) {
    const Response out = handler.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server.Get(R"(/.*)", route);
  server.Post(R"(/.*)", route);
}

}  // namespace prda::service
