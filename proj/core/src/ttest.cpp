// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/ttest.hpp"

#include <cmath>
#include <string>

#include "prda/distributions.hpp"
#include "prda/error.hpp"

namespace prda {

void SampleSummary::validate(const char* field) const {
  if (n < 2) throw InvalidParameter(std::string(field) + ".n", "group size must be at least 2");
  if (!(sd > 0.0) || !std::isfinite(sd)) {
    throw InvalidParameter(std::string(field) + ".sd", "standard deviation must be positive");
  }
  if (!std::isfinite(mean)) throw InvalidParameter(std::string(field) + ".mean", "must be finite");
}

std::vector<double> draw_group(int n, double mean, double sd, RandomSource rng) {
  if (n < 2) throw InvalidParameter("n", "group size must be at least 2");
  if (!(sd > 0.0)) throw InvalidParameter("sd", "standard deviation must be positive");
  Generator gen(rng);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto& v : out) v = mean + sd * gen.normal();
  return out;
}

SampleSummary summarize(const std::vector<double>& values) {
  if (values.size() < 2) throw InvalidParameter("values", "need at least two observations");
  double mean = 0.0;
  double m2 = 0.0;
  double k = 0.0;
  for (double v : values) {
    k += 1.0;
    const double delta = v - mean;
    mean += delta / k;
    m2 += delta * (v - mean);
  }
  return {static_cast<int>(values.size()), mean, std::sqrt(m2 / (k - 1.0))};
}

double pooled_sd(const SampleSummary& a, const SampleSummary& b) {
  a.validate("a");
  b.validate("b");
  const double df = a.n + b.n - 2.0;
  return std::sqrt(((a.n - 1.0) * a.sd * a.sd + (b.n - 1.0) * b.sd * b.sd) / df);
}

double cohens_d_estimate(const SampleSummary& a, const SampleSummary& b) {
  return (a.mean - b.mean) / pooled_sd(a, b);
}

double two_sided_p(double t, int df) {
  if (t == 0.0) return 1.0;
  const double p = 2.0 * central_t_cdf(-std::fabs(t), df);
  return p > 1.0 ? 1.0 : p;
}

TTestOutcome two_sample_t(const SampleSummary& a, const SampleSummary& b, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("sigLevel", "must lie in (0, 1)");
  TTestOutcome out;
  out.d_hat = cohens_d_estimate(a, b);
  out.df = a.n + b.n - 2;
  out.t = out.d_hat / std::sqrt(1.0 / a.n + 1.0 / b.n);
  out.p_value = two_sided_p(out.t, out.df);
  out.reject = out.p_value < alpha;
  return out;
}

}  // namespace prda
