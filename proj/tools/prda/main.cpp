// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

// prda: prospective and retrospective design analysis from the command line.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "prda/scenario.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnreachable = 3;

struct Flags {
  std::optional<double> d, power, sig_level, tol, target_d, limits_lo, limits_hi, level;
  std::optional<int> n, n1, n2, B, B0, rangen_lo, rangen_hi;
  std::optional<std::string> distribution, k, seed;
  std::optional<double> mean1, sd1, mean2, sd2;
  std::vector<int> n_grid;
  bool return_data = false;
  std::string mode = "simulate";
  std::string output = "human";
  unsigned workers = 0;
};

// Accepts decimals and simple fractions such as "1/6".
std::optional<double> parse_fraction(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      return used == text.size() ? std::optional(v) : std::nullopt;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    std::size_t used_den = 0;
    const double a = std::stod(num, &used);
    const double b = std::stod(den, &used_den);
    if (used != num.size() || used_den != den.size() || b == 0.0) return std::nullopt;
    return a / b;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void add_common(CLI::App* cmd, Flags& f, bool simulated) {
  cmd->add_option("--sig-level", f.sig_level, "Type I error rate (default 0.05)");
  if (simulated) {
    cmd->add_option("--seed", f.seed, "64-bit seed; drawn and reported when omitted");
    cmd->add_option("--mode", f.mode, "simulate or exact (noncentral t)")
        ->check(CLI::IsMember({"simulate", "exact"}));
  }
  cmd->add_option("--workers", f.workers, "worker threads (0 = all cores)");
  cmd->add_option("--output,-o", f.output, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
}

template <typename T>
void put(json& body, const char* key, const std::optional<T>& v) {
  if (v) body[key] = *v;
}

json build_body(const std::string& command, const Flags& f) {
  json body = json::object();
  if (command == "interpret") {
    put(body, "d", f.d);
    if (f.n1 || f.mean1 || f.sd1) {
      json a = json::object();
      put(a, "n", f.n1);
      put(a, "mean", f.mean1);
      put(a, "sd", f.sd1);
      body["a"] = a;
    }
    if (f.n2 || f.mean2 || f.sd2) {
      json b = json::object();
      put(b, "n", f.n2);
      put(b, "mean", f.mean2);
      put(b, "sd", f.sd2);
      body["b"] = b;
    }
    put(body, "level", f.level);
    return body;
  }
  put(body, "d", f.d);
  put(body, "n", f.n);
  put(body, "n1", f.n1);
  put(body, "n2", f.n2);
  put(body, "power", f.power);
  put(body, "sigLevel", f.sig_level);
  put(body, "B", f.B);
  put(body, "B0", f.B0);
  put(body, "tol", f.tol);
  put(body, "targetD", f.target_d);
  put(body, "distribution", f.distribution);
  if (f.rangen_lo || f.rangen_hi) {
    body["rangen"] = {f.rangen_lo.value_or(2), f.rangen_hi.value_or(1000)};
  }
  if (f.limits_lo || f.limits_hi) {
    if (f.limits_lo && f.limits_hi) {
      body["limits"] = {*f.limits_lo, *f.limits_hi};
    } else {
      body["limits"] = f.limits_lo ? *f.limits_lo : *f.limits_hi;  // rejected downstream
    }
  }
  if (f.k) {
    const auto k = parse_fraction(*f.k);
    body["k"] = k ? json(*k) : json(*f.k);
  }
  if (!f.n_grid.empty()) body["nGrid"] = f.n_grid;
  if (f.return_data) body["returnData"] = true;
  if (f.seed) {
    body["seed"] = *f.seed;  // string form keeps all 64 bits
  }
  body["mode"] = f.mode;
  return body;
}

prda::OutputFormat output_format(const std::string& s) {
  if (s == "json") return prda::OutputFormat::json;
  if (s == "csv") return prda::OutputFormat::csv;
  return prda::OutputFormat::human;
}

int report_error(const Flags& f, int code, const json& error, const std::string& text) {
  if (f.output == "json") {
    std::cout << json{{"status", "error"}, {"error", error}}.dump(2) << '\n';
  }
  std::cerr << "prda: " << text << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prospective and retrospective design analysis for two-group Cohen's d designs"};
  app.require_subcommand(1);
  Flags f;

  auto* prospective = app.add_subcommand("prospective", "smallest n per group reaching a target power");
  prospective->add_option("--d", f.d, "plausible Cohen's d")->required();
  prospective->add_option("--power", f.power, "target power")->required();
  prospective->add_option("--B", f.B, "replicates per probed n (default 10000)");
  prospective->add_option("--rangen-lo", f.rangen_lo, "smallest n searched (default 2)");
  prospective->add_option("--rangen-hi", f.rangen_hi, "largest n searched (default 1000)");
  prospective->add_option("--tol", f.tol, "power shortfall tolerated at the range end (default .005)");
  add_common(prospective, f, true);

  auto* retrospective = app.add_subcommand("retrospective", "power, Type S and Type M for a given n");
  retrospective->add_option("--d", f.d, "plausible Cohen's d")->required();
  retrospective->add_option("--n", f.n, "sample size per group");
  retrospective->add_option("--n1", f.n1, "size of the first group");
  retrospective->add_option("--n2", f.n2, "size of the second group (default n1)");
  retrospective->add_option("--B", f.B, "replicates (default 10000)");
  add_common(retrospective, f, true);

  auto* analysis = app.add_subcommand(
      "design-analysis", "prospective when --power is given, retrospective when --n is given");
  analysis->add_option("--d", f.d, "plausible Cohen's d")->required();
  analysis->add_option("--n", f.n, "sample size per group");
  analysis->add_option("--power", f.power, "target power");
  analysis->add_option("--B", f.B, "replicates (default 10000)");
  analysis->add_option("--rangen-lo", f.rangen_lo, "smallest n searched (default 2)");
  analysis->add_option("--rangen-hi", f.rangen_hi, "largest n searched (default 1000)");
  analysis->add_option("--tol", f.tol, "power shortfall tolerated at the range end");
  add_common(analysis, f, true);

  auto* est = app.add_subcommand("design-est", "retrospective analysis over a plausible interval");
  est->add_option("--n", f.n, "sample size per group");
  est->add_option("--n1", f.n1, "size of the first group");
  est->add_option("--n2", f.n2, "size of the second group (default n1)");
  est->add_option("--target-d", f.target_d, "single plausible d");
  est->add_option("--limits-lo", f.limits_lo, "lower end of the plausible interval");
  est->add_option("--limits-hi", f.limits_hi, "upper end of the plausible interval");
  est->add_option("--distribution", f.distribution, "uniform or normal (default uniform)");
  est->add_option("--k", f.k, "normal sd as a fraction of the interval length (default 1/6)");
  est->add_option("--B", f.B, "replicates per drawn effect (default 500)");
  est->add_option("--B0", f.B0, "effects drawn from the interval (default 500)");
  est->add_flag("--return-data", f.return_data, "include one row per drawn effect");
  add_common(est, f, true);

  auto* sens = app.add_subcommand("sensitivity", "power, Type S and Type M across a grid of n");
  sens->add_option("--d", f.d, "plausible Cohen's d")->required();
  sens->add_option("--n-grid", f.n_grid, "per-group sizes, e.g. 10,20,48")
      ->required()
      ->delimiter(',');
  sens->add_option("--B", f.B, "replicates per grid point (default 10000)");
  add_common(sens, f, true);

  auto* interp = app.add_subcommand("interpret", "Cohen's d with CI, CL, U3 and benchmark label");
  interp->add_option("--d", f.d, "effect size to interpret");
  interp->add_option("--n1", f.n1, "first group size");
  interp->add_option("--mean1", f.mean1, "first group mean");
  interp->add_option("--sd1", f.sd1, "first group standard deviation");
  interp->add_option("--n2", f.n2, "second group size");
  interp->add_option("--mean2", f.mean2, "second group mean");
  interp->add_option("--sd2", f.sd2, "second group standard deviation");
  interp->add_option("--level", f.level, "confidence level (default .95)");
  add_common(interp, f, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (command == "design-analysis") {
    if (f.n.has_value() == f.power.has_value()) {
      std::cerr << "prda: design-analysis needs either --n or --power (exactly one)\n";
      return kExitInvalid;
    }
    command = f.power ? "prospective" : "retrospective";
  }

  try {
    const auto cmd = prda::parse_command(command);
    const prda::ScenarioRequest request = prda::parse_request(*cmd, build_body(command, f));
    const prda::ScenarioReport report = prda::run_scenario(request, {f.workers});
    const auto format = output_format(f.output);
    if (format == prda::OutputFormat::csv && report.request.seed) {
      std::cerr << "seed = " << *report.request.seed << '\n';
    }
    std::cout << prda::render(report, format);
    return kExitOk;
  } catch (const prda::RequestError& e) {
    json fields = json::array();
    for (const auto& fe : e.errors()) fields.push_back({{"field", fe.field}, {"message", fe.message}});
    return report_error(f, kExitInvalid,
                        {{"code", "invalid-parameter"}, {"message", e.what()}, {"fields", fields}},
                        e.what());
  } catch (const prda::InvalidParameter& e) {
    return report_error(f, kExitInvalid,
                        {{"code", "invalid-parameter"},
                         {"message", e.what()},
                         {"fields", json::array({{{"field", e.field()}, {"message", e.detail()}}})}},
                        e.what());
  } catch (const prda::UnreachablePower& e) {
    return report_error(f, kExitUnreachable,
                        {{"code", "unreachable-power"},
                         {"message", e.what()},
                         {"n", e.n_upper()},
                         {"achievedPower", e.achieved_power()},
                         {"targetPower", e.target_power()}},
                        e.what());
  } catch (const std::exception& e) {
    return report_error(f, kExitInternal, {{"code", "internal"}, {"message", e.what()}}, e.what());
  }
}
