// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(PRDA_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

using nlohmann::json;

TEST(Cli, RetrospectiveJson) {
  const RunResult r = run("retrospective --d 0.5 --n 20 --seed 7 -o json");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "retrospective");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_NEAR(j["result"]["power"].get<double>(), 0.338, 0.02);
}

TEST(Cli, SameSeedIsByteIdentical) {
  const char* commands[] = {
      "retrospective --d 0.5 --n 20 --seed 3 -o json",
      "prospective --d 0.5 --power 0.8 --B 2000 --seed 3 -o json",
      "design-est --n 31 --limits-lo 0.2 --limits-hi 0.6 --distribution normal --B 200 --B0 100 "
      "--seed 3 -o json",
      "sensitivity --d 0.35 --n-grid 10,48,130 --B 2000 --seed 3 -o json",
      "interpret --n1 31 --mean1 114 --sd1 16 --n2 31 --mean2 100 --sd2 15 -o json",
  };
  for (const char* c : commands) {
    const RunResult a = run(std::string(c) + " --workers 1");
    const RunResult b = run(std::string(c) + " --workers 8");
    const RunResult again = run(std::string(c) + " --workers 1");
    ASSERT_EQ(a.exit_code, 0) << c;
    EXPECT_EQ(a.out, b.out) << c;
    EXPECT_EQ(a.out, again.out) << c;
  }
}

TEST(Cli, DesignAnalysisDispatch) {
  EXPECT_EQ(run("design-analysis --d 0.25 --n 31 --mode exact").exit_code, 0);
  const RunResult p = run("design-analysis --d 0.5 --power 0.8 --mode exact -o json");
  ASSERT_EQ(p.exit_code, 0);
  EXPECT_EQ(json::parse(p.out)["result"]["n"], 64);
  EXPECT_EQ(run("design-analysis --d 0.5").exit_code, 2);
  EXPECT_EQ(run("design-analysis --d 0.5 --n 20 --power 0.8").exit_code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("retrospective --d 0 --n 20").exit_code, 2);
  EXPECT_EQ(run("retrospective --d 0.5").exit_code, 2);
  EXPECT_EQ(run("retrospective --d 0.5 --n 20 --sig-level 2").exit_code, 2);
  EXPECT_EQ(run("no-such-command").exit_code, 2);
  EXPECT_EQ(run("prospective --d 0.2 --power 0.9 --rangen-hi 10 --B 500 --seed 1").exit_code, 3);
}

TEST(Cli, JsonErrors) {
  const RunResult r = run("retrospective --d 0 --n 20 -o json");
  EXPECT_EQ(r.exit_code, 2);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["error"]["code"], "invalid-parameter");
}

TEST(Cli, HumanOutputNamesSeed) {
  const RunResult r = run("retrospective --d 0.5 --n 20 --B 500 --seed 11");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("typeM"), std::string::npos);
  EXPECT_NE(r.out.find("seed = 11"), std::string::npos);
}

TEST(Cli, CsvOutput) {
  const RunResult r = run("sensitivity --d 0.35 --n-grid 10,48 --mode exact -o csv");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("n,power,type_s,type_m\n10,", 0), 0u) << r.out;
}

TEST(Cli, DrawnSeedReplays) {
  const RunResult a = run("retrospective --d 0.5 --n 20 --B 500 -o json");
  ASSERT_EQ(a.exit_code, 0);
  const auto seed = json::parse(a.out)["seed"].get<std::uint64_t>();
  const RunResult b =
      run("retrospective --d 0.5 --n 20 --B 500 -o json --seed " + std::to_string(seed));
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
