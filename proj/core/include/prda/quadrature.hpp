// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace prda {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_intervals = 2000;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]: the interval with the largest
/// error estimate is bisected until the total error meets the tolerance.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Integral over [a, inf) through the substitution x = a + s / (1 - s).
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& options = {});

}  // namespace prda
