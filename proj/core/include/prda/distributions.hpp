// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "prda/random.hpp"

namespace prda {

double normal_pdf(double x) noexcept;
double normal_cdf(double x) noexcept;
/// Upper tail 1 - Phi(x), accurate far into the right tail.
double normal_sf(double x) noexcept;
/// Inverse of normal_cdf on (0, 1); absolute error below 1e-14 in the body.
double normal_quantile(double p);

/// Regularized incomplete beta I_x(a, b). `y` must equal 1 - x; passing it
/// separately keeps precision when x is close to one.
double incomplete_beta(double a, double b, double x, double y);
double incomplete_beta(double a, double b, double x);

double central_t_pdf(double x, double df);
double central_t_cdf(double x, double df);
double central_t_quantile(double p, double df);

/// One draw from Normal(mu, sigma) restricted to [lower, upper], by inversion.
/// Consumes exactly one uniform from `gen`.
double truncated_normal_draw(double lower, double upper, double mu, double sigma,
                             Generator& gen);
double truncated_normal_draw(double lower, double upper, double mu, double sigma,
                             RandomSource rng);

}  // namespace prda
