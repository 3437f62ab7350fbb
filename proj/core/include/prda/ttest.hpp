// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "prda/random.hpp"

namespace prda {

/// Per-group sufficient statistics for the pooled t-test.
struct SampleSummary {
  int n = 0;
  double mean = 0.0;
  double sd = 0.0;

  /// Throws InvalidParameter unless n >= 2 and sd > 0.
  void validate(const char* field = "group") const;
};

struct TTestOutcome {
  double t = 0.0;
  int df = 0;
  double p_value = 1.0;
  double d_hat = 0.0;
  bool reject = false;
};

/// n independent Normal(mean, sd) draws.
std::vector<double> draw_group(int n, double mean, double sd, RandomSource rng);

SampleSummary summarize(const std::vector<double>& values);

/// sqrt(((na-1) sa^2 + (nb-1) sb^2) / (na + nb - 2)).
double pooled_sd(const SampleSummary& a, const SampleSummary& b);

/// Standardized mean difference; positive when group a exceeds group b.
double cohens_d_estimate(const SampleSummary& a, const SampleSummary& b);

/// Two-sided pooled-variance Student t-test.
TTestOutcome two_sample_t(const SampleSummary& a, const SampleSummary& b, double alpha);

/// Two-sided p-value for a t statistic.
double two_sided_p(double t, int df);

}  // namespace prda
