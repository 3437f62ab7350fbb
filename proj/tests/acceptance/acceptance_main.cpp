// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion, detail lines indented.
// Seed and replicate counts are fixed here and never tuned per outcome.

#include <prda/design.hpp>
#include <prda/distributions.hpp>
#include <prda/effect_model.hpp>
#include <prda/error.hpp>
#include <prda/interpret.hpp>
#include <prda/oracle.hpp>
#include <prda/prospective.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reference.hpp"

namespace {

using namespace prda;

constexpr std::uint64_t kSeed = 1;
constexpr int kRetroB = 100000;
constexpr int kProspectiveB = 100000;
constexpr int kPriorB = 500;
constexpr int kPriorB0 = 500;
constexpr double kAlpha = 0.05;

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void near(const std::string& what, double got, double want, double tol) {
    record(what, std::fabs(got - want) <= tol, got, want, tol);
  }
  void within(const std::string& what, double got, double lo, double hi) {
    std::ostringstream os;
    os << what << " = " << got << " in [" << lo << ", " << hi << "]";
    check(os.str(), got >= lo && got <= hi);
  }
  void check(const std::string& what, bool ok) {
    passed_ = passed_ && ok;
    std::cout << "    " << (ok ? "ok   " : "MISS ") << what << "\n";
  }
  bool finish() const {
    std::cout << "criterion " << id_ << " (" << title_ << "): " << (passed_ ? "PASS" : "FAIL")
              << "\n"
              << std::flush;
    return passed_;
  }

 private:
  void record(const std::string& what, bool ok, double got, double want, double tol) {
    std::ostringstream os;
    os.precision(5);
    os << what << " = " << got << " (want " << want << " +- " << tol << ")";
    check(os.str(), ok);
  }

  int id_;
  std::string title_;
  bool passed_ = true;
};

double mc_tol(double p, double count) { return 4.0 * std::sqrt(p * (1.0 - p) / count); }

struct PointCase {
  double d;
  int n1, n2;
  DesignResult mc;
  double type_m_tol;
};

std::vector<PointCase> g_points;     // every retrospective point, for criterion 7
std::vector<ProspectiveResult> g_prospective;

DesignResult retro(double d, int n1, int n2, double type_m_tol) {
  const DesignResult r = retrospective(d, n1, n2, kAlpha, kRetroB, kSeed);
  g_points.push_back({d, n1, n2, r, type_m_tol});
  return r;
}

std::string label(double d, int n1, int n2) {
  std::ostringstream os;
  os << "d=" << d << " n=" << n1 << "/" << n2;
  return os.str();
}

bool criterion_1() {
  Criterion c(1, "retrospective d=.5 n=20");
  const DesignResult r = retro(0.5, 20, 20, 0.05);
  c.near("power", r.power, 0.346, 0.02);
  c.near("typeS", r.type_s, 0.0012, 0.002);
  c.near("typeM", r.type_m.value_or(NAN), 1.74, 0.05);
  return c.finish();
}

bool criterion_2() {
  Criterion c(2, "winner's curse d=.2 n=33");
  const DesignResult r = retro(0.2, 33, 33, 0.15);
  c.near("power", r.power, 0.13, 0.015);
  c.near("typeM", r.type_m.value_or(NAN), 3.11, 0.15);
  c.near("typeS", r.type_s, 0.02, 0.006);
  return c.finish();
}

bool criterion_3() {
  Criterion c(3, "retrospective d=.25 n=31");
  const DesignResult r = retro(0.25, 31, 31, 0.12);
  c.near("power", r.power, 0.16, 0.015);
  c.near("typeS", r.type_s, 0.01, 0.005);
  c.near("typeM", r.type_m.value_or(NAN), 2.59, 0.12);
  return c.finish();
}

bool criterion_4() {
  Criterion c(4, "prospective sample sizes");
  struct Row {
    double d, power;
    int n;
    int tol;
    double type_m, type_m_tol;
  };
  const Row rows[] = {
      {0.25, 0.80, 252, 3, 1.13, 0.03}, {0.25, 0.60, 158, 3, 1.30, 0.04},
      {0.50, 0.80, 64, 2, NAN, 0},      {0.20, 0.80, 392, 3, NAN, 0},
      {0.35, 0.80, 130, 3, NAN, 0},     {0.20, 0.60, 244, 3, NAN, 0},
      {0.35, 0.60, 82, 3, NAN, 0},      {0.50, 0.60, 40, 3, NAN, 0},
  };
  for (const Row& row : rows) {
    ProspectiveSpec spec;
    spec.d = row.d;
    spec.target_power = row.power;
    spec.alpha = kAlpha;
    spec.B = kProspectiveB;
    const ProspectiveResult r = find_sample_size(spec, kSeed);
    g_prospective.push_back(r);
    std::ostringstream name;
    name << "n(d=" << row.d << ", power=" << row.power << ")";
    c.near(name.str(), r.n_per_group, row.n, row.tol);
    if (!std::isnan(row.type_m))
      c.near("  typeM at that n", r.achieved.type_m.value_or(NAN), row.type_m, row.type_m_tol);
  }
  return c.finish();
}

struct PriorCase {
  int n1, n2;
  double lo, hi;
  DesignEstResult mc;
};
std::vector<PriorCase> g_priors;

DesignEstResult prior_run(int n1, int n2, double lo, double hi) {
  DesignEstSpec s;
  s.n1 = n1;
  s.n2 = n2;
  s.prior = EffectPrior::truncated_normal(lo, hi);
  s.alpha = kAlpha;
  s.B = kPriorB;
  s.B0 = kPriorB0;
  const DesignEstResult r = design_est(s, kSeed);
  g_priors.push_back({n1, n2, lo, hi, r});
  return r;
}

bool criterion_5() {
  Criterion c(5, "interval priors (truncated normal, k=1/6)");
  const DesignEstResult a = prior_run(31, 31, 0.20, 0.60);
  c.near("[.20,.60] n=31/31 power", a.power, 0.35, 0.02);
  c.within("[.20,.60] n=31/31 typeS", a.type_s, 0.0, 0.005);
  c.near("[.20,.60] n=31/31 typeM", a.type_m.value_or(NAN), 1.73, 0.06);
  const DesignEstResult b = prior_run(50, 48, 0.20, 0.30);
  c.near("[.20,.30] n=50/48 power", b.power, 0.233, 0.02);
  c.near("[.20,.30] n=50/48 typeS", b.type_s, 0.004, 0.004);
  c.near("[.20,.30] n=50/48 typeM", b.type_m.value_or(NAN), 2.09, 0.10);
  const DesignEstResult d = prior_run(34, 33, 0.25, 0.45);
  c.near("[.25,.45] n=34/33 power", d.power, 0.29, 0.02);
  c.within("[.25,.45] n=34/33 typeS", d.type_s, 0.0, 0.004);
  c.near("[.25,.45] n=34/33 typeM", d.type_m.value_or(NAN), 1.86, 0.08);
  return c.finish();
}

bool criterion_6() {
  Criterion c(6, "point sweep at n=34/33");
  const DesignResult a = retro(0.20, 34, 33, 0.15);
  c.near("d=.20 power", a.power, 0.13, 0.015);
  c.near("d=.20 typeM", a.type_m.value_or(NAN), 3.06, 0.15);
  c.near("d=.20 typeS", a.type_s, 0.02, 0.006);
  const DesignResult b = retro(0.35, 34, 33, 0.08);
  c.near("d=.35 power", b.power, 0.29, 0.02);
  c.near("d=.35 typeM", b.type_m.value_or(NAN), 1.86, 0.08);
  c.within("d=.35 typeS", b.type_s, 0.0, 0.005);
  const DesignResult d = retro(0.50, 34, 33, 0.05);
  c.near("d=.50 power", d.power, 0.52, 0.02);
  c.near("d=.50 typeM", d.type_m.value_or(NAN), 1.40, 0.05);
  return c.finish();
}

// Prior-averaged exact values; Type M is judged against the prior center.
struct PriorOracle {
  double power, power_sd, type_s, type_m;
};

PriorOracle prior_oracle(const PriorCase& pc) {
  const double mu = 0.5 * (pc.lo + pc.hi);
  const double sigma = (pc.hi - pc.lo) / 6.0;
  const double z = normal_cdf((pc.hi - mu) / sigma) - normal_cdf((pc.lo - mu) / sigma);
  const double t_crit = central_t_quantile(1.0 - kAlpha / 2.0, pc.n1 + pc.n2 - 2);
  const int steps = 40;
  const double h = (pc.hi - pc.lo) / steps;
  double m1 = 0, m2 = 0, within = 0, ts = 0, tm = 0;
  for (int i = 0; i <= steps; ++i) {
    const double d = pc.lo + i * h;
    const double w = ((i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2)) * h / 3.0 *
                     normal_pdf((d - mu) / sigma) / sigma / z;
    const auto ref = reference::design(d, mu, pc.n1, pc.n2, t_crit);
    m1 += w * ref.power;
    m2 += w * ref.power * ref.power;
    within += w * ref.power * (1 - ref.power);
    ts += w * ref.type_s;
    tm += w * ref.type_m;
  }
  const double var = (m2 - m1 * m1) / kPriorB0 + within / (double(kPriorB) * kPriorB0);
  return {m1, std::sqrt(var), ts, tm};
}

bool criterion_7() {
  Criterion c(7, "Monte Carlo agrees with the analytic oracle");
  for (const PointCase& p : g_points) {
    const DesignResult ex = exact_design(p.d, p.n1, p.n2, kAlpha);
    const std::string tag = label(p.d, p.n1, p.n2);
    c.near(tag + " power", p.mc.power, ex.power, mc_tol(ex.power, kRetroB));
    const double n_sig = static_cast<double>(p.mc.n_significant);
    c.near(tag + " typeS", p.mc.type_s, ex.type_s, mc_tol(ex.type_s, n_sig) + 1.0 / n_sig);
    c.near(tag + " typeM", p.mc.type_m.value_or(NAN), *ex.type_m, p.type_m_tol);
  }
  for (const ProspectiveResult& r : g_prospective) {
    const double d = r.achieved.d_true;
    const int exact_n = exact_sample_size(d, r.target_power, kAlpha, r.range).n_per_group;
    std::ostringstream tag;
    tag << "prospective d=" << d << " power=" << r.target_power;
    c.near(tag.str() + " n vs oracle n", r.n_per_group, exact_n, 3);
    const double ex_power = exact_power(d, r.n_per_group, r.n_per_group, kAlpha);
    c.near(tag.str() + " achieved power", r.achieved.power, ex_power,
           mc_tol(ex_power, kProspectiveB));
  }
  for (const PriorCase& pc : g_priors) {
    const PriorOracle o = prior_oracle(pc);
    std::ostringstream tag;
    tag << "prior [" << pc.lo << "," << pc.hi << "] n=" << pc.n1 << "/" << pc.n2;
    c.near(tag.str() + " power", pc.mc.power, o.power, 4 * o.power_sd);
    c.near(tag.str() + " typeS", pc.mc.type_s, o.type_s, 0.004);
    c.near(tag.str() + " typeM", pc.mc.type_m.value_or(NAN), o.type_m, 0.06);
  }
  double worst_null = 0.0;
  for (int n : {2, 5, 10, 20, 31, 33, 34, 48, 100, 252, 1000})
    for (double alpha : {0.01, 0.05, 0.1})
      worst_null = std::max(worst_null, std::fabs(exact_power(0.0, n, n, alpha) - alpha));
  c.near("max |exact_power(0) - alpha|", worst_null, 0.0, 1e-8);
  double worst_s = 0.0;
  for (int n : {5, 20, 33, 100, 500})
    worst_s = std::max(worst_s, std::fabs(exact_type_s(1e-8, n, n, kAlpha) - 0.5));
  c.near("max |typeS(d->0) - 0.5|", worst_s, 0.0, 1e-4);
  return c.finish();
}

bool criterion_8() {
  Criterion c(8, "effect size interpretation");
  const EffectInterpretation e = interpret_from_summaries({31, 114, 16}, {31, 100, 15}, 0.95);
  c.near("d", e.d, 0.90, 0.01);
  c.near("CI low", e.ci_low, 0.38, 0.01);
  c.near("CI high", e.ci_high, 1.43, 0.01);
  const double table[][3] = {{0.2, 0.56, 0.58}, {0.5, 0.64, 0.69}, {0.8, 0.71, 0.79}};
  for (const auto& row : table) {
    std::ostringstream tag;
    tag << "d=" << row[0];
    c.near(tag.str() + " CL", common_language(row[0]), row[1], 0.005);
    c.near(tag.str() + " U3", u3(row[0]), row[2], 0.005);
  }
  return c.finish();
}

bool criterion_9() {
  Criterion c(9, "sensitivity curve at d=.35");
  const std::vector<int> grid{10, 20, 48, 100, 130, 200, 500};
  bool power_up = true, type_m_down = true;
  double last_p = -1, last_m = 1e300;
  for (int n : grid) {
    const DesignResult r = exact_design(0.35, n, n, kAlpha);
    power_up = power_up && r.power > last_p;
    type_m_down = type_m_down && *r.type_m < last_m;
    last_p = r.power;
    last_m = *r.type_m;
  }
  c.check("oracle power strictly increasing", power_up);
  c.check("oracle typeM strictly decreasing", type_m_down);
  const auto curve = sensitivity_curve(0.35, grid, kAlpha, kRetroB, kSeed);
  for (const auto& pt : curve) {
    if (pt.n == 48) {
      c.near("n=48 power (simulated)", pt.result.power, 0.40, 0.01);
      c.near("n=48 typeM (simulated)", pt.result.type_m.value_or(NAN), 1.58, 0.03);
      c.near("n=48 power (oracle)", exact_power(0.35, 48, 48, kAlpha), 0.40, 0.01);
      c.near("n=48 typeM (oracle)", exact_type_m(0.35, 48, 48, kAlpha), 1.58, 0.03);
    }
    if (pt.n == 10) {
      c.near("n=10 typeS (simulated)", pt.result.type_s, 0.03, 0.01);
      c.near("n=10 typeS (oracle)", exact_type_s(0.35, 10, 10, kAlpha), 0.03, 0.01);
    }
  }
  return c.finish();
}

struct Captured {
  int code;
  std::string out;
};

Captured capture(const std::string& args) {
  const std::string cmd = std::string(PRDA_CLI_PATH) + " " + args + " 2>/dev/null";
  Captured r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool criterion_10() {
  Criterion c(10, "determinism across runs and worker counts");
  const char* commands[] = {
      "retrospective --d 0.5 --n 20 --seed 42 -o json",
      "retrospective --d 0.35 --n1 34 --n2 33 --seed 42 -o json",
      "prospective --d 0.5 --power 0.8 --seed 42 -o json",
      "design-est --n1 31 --n2 31 --limits-lo 0.2 --limits-hi 0.6 --distribution normal "
      "--return-data --seed 42 -o json",
      "design-est --n 30 --target-d 0.4 --seed 42 -o json",
      "sensitivity --d 0.35 --n-grid 10,20,48,100 --seed 42 -o json",
      "interpret --n1 31 --mean1 114 --sd1 16 --n2 31 --mean2 100 --sd2 15 -o json",
      "retrospective --d 0.5 --n 20 --mode exact -o json",
  };
  for (const char* cmd : commands) {
    const Captured a = capture(std::string(cmd) + " --workers 1");
    const Captured b = capture(std::string(cmd) + " --workers 1");
    const Captured w = capture(std::string(cmd) + " --workers 8");
    c.check(std::string(cmd) + ": exit 0, repeat identical, workers 1 vs 8 identical",
            a.code == 0 && !a.out.empty() && a.out == b.out && a.out == w.out);
  }
  return c.finish();
}

bool criterion_11() {
  Criterion c(11, "significant estimates at d=.2 n=33 exceed .49");
  const auto rows = replicate({0.2, 33, 33, 10000, kAlpha, 0.2}, design_point_source(kSeed));
  int significant = 0, violations = 0;
  for (const auto& r : rows) {
    if (!r.significant) continue;
    ++significant;
    if (std::fabs(r.d_hat) <= 0.49) ++violations;
  }
  c.check("replicates = " + std::to_string(rows.size()) +
              ", significant = " + std::to_string(significant),
          rows.size() == 10000 && significant > 0);
  c.near("violations", violations, 0, 0);
  return c.finish();
}

}  // namespace

int main() {
  std::cout.precision(6);
  bool (*const criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                                criterion_5, criterion_6, criterion_7, criterion_8,
                                criterion_9, criterion_10, criterion_11};
  int failed = 0;
  int id = 0;
  for (auto* fn : criteria) {
    ++id;
    try {
      if (!fn()) ++failed;
    } catch (const std::exception& e) {
      std::cout << "criterion " << id << ": FAIL (exception: " << e.what() << ")\n";
      ++failed;
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
