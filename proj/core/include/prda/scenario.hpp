// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "prda/error.hpp"
#include "prda/parallel.hpp"
#include "prda/prospective.hpp"
#include "prda/ttest.hpp"

namespace prda {

enum class Command { prospective, retrospective, design_est, sensitivity, interpret };
enum class Mode { simulate, exact };
enum class OutputFormat { human, json, csv };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(Mode m) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

struct FieldError {
  std::string field;
  std::string message;
};

/// Malformed request: every problem found while reading the body.
class RequestError : public InvalidParameter {
 public:
  explicit RequestError(std::vector<FieldError> errors);
  const std::vector<FieldError>& errors() const noexcept { return errors_; }

 private:
  std::vector<FieldError> errors_;
};

struct ProspectiveParams {
  double d = 0.0;
  double power = 0.8;
  double sig_level = 0.05;
  int B = 10000;
  SearchRange rangen;
  double tol = 0.005;
};

struct RetrospectiveParams {
  double d = 0.0;
  int n1 = 0;
  int n2 = 0;
  double sig_level = 0.05;
  int B = 10000;
};

struct DesignEstParams {
  int n1 = 0;
  int n2 = 0;
  std::optional<double> target_d;
  std::optional<std::pair<double, double>> limits;
  std::string distribution = "uniform";
  double k = 1.0 / 6.0;
  double sig_level = 0.05;
  int B = 500;
  int B0 = 500;
  bool return_data = false;
};

struct SensitivityParams {
  double d = 0.0;
  std::vector<int> n_grid;
  double sig_level = 0.05;
  int B = 10000;
};

struct InterpretParams {
  std::optional<double> d;
  std::optional<SampleSummary> a;
  std::optional<SampleSummary> b;
  double level = 0.95;
};

using ScenarioParams = std::variant<ProspectiveParams, RetrospectiveParams, DesignEstParams,
                                    SensitivityParams, InterpretParams>;

struct ScenarioRequest {
  Command command = Command::retrospective;
  Mode mode = Mode::simulate;
  std::optional<std::uint64_t> seed;
  ScenarioParams params;
};

/// Reads a request body (camelCase keys). Unknown keys, wrong types, missing
/// or conflicting parameters are all reported together as a RequestError.
ScenarioRequest parse_request(Command command, const nlohmann::json& body);

/// Normalized body: every parameter with its default filled in, plus mode and
/// seed. Feeding it back to parse_request reproduces the request.
nlohmann::json request_to_json(const ScenarioRequest& request);

/// Fresh seed below 2^53 so that it survives JavaScript number handling.
std::uint64_t draw_seed();

struct ScenarioReport {
  ScenarioRequest request;  // seed resolved for simulate mode
  nlohmann::json result;
};

/// Runs the request. A simulate-mode request without seed gets one from
/// draw_seed(); exact mode never carries a seed.
ScenarioReport run_scenario(ScenarioRequest request, const ExecutionPolicy& policy = {});

/// {"command", "mode", "seed"?, "request", "result"}.
nlohmann::json report_to_json(const ScenarioReport& report);

std::string render(const ScenarioReport& report, OutputFormat format);

/// Product of replicate counts a request would simulate (for size caps).
double simulation_cost(const ScenarioRequest& request);

}  // namespace prda
