// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "prda/design.hpp"
#include "prda/prospective.hpp"

namespace prda {

/// Distribution of the pooled t statistic under a true standardized effect:
/// T ~ noncentral t(df, ncp), and d_hat = scale * T.
struct NoncentralSpec {
  int df = 0;
  double ncp = 0.0;
  double t_crit = 0.0;
  double scale = 0.0;
};

NoncentralSpec make_noncentral_spec(double d, int n1, int n2, double alpha);

/// P(T <= x) for T ~ noncentral t(df, ncp), from the Poisson mixture of
/// incomplete beta functions summed outward from its largest term.
double noncentral_t_cdf(double x, double df, double ncp);

/// Density via the df + 2 derivative identity; closed form at x = 0.
double noncentral_t_pdf(double x, double df, double ncp);

double exact_power(double d, int n1, int n2, double alpha);

/// Probability that a significant result has the sign opposite to d.
double exact_type_s(double d, int n1, int n2, double alpha);

/// E[|d_hat| | significant] / |d|, by adaptive quadrature of |t| f(t) over
/// the two rejection tails.
double exact_type_m(double d, int n1, int n2, double alpha);

/// All three indices in a DesignResult (B = 0, n_significant = 0).
DesignResult exact_design(double d, int n1, int n2, double alpha);

/// Smallest n in range with exact_power(d, n, n, alpha) >= target.
/// Throws UnreachablePower when even range.upper falls short.
ProspectiveResult exact_sample_size(double d, double target_power, double alpha,
                                    SearchRange range);

}  // namespace prda
