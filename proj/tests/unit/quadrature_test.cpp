// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include <prda/quadrature.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace prda {
namespace {

TEST(Quadrature, Polynomial) {
  const auto r = integrate([](double x) { return x * x * x - 2 * x; }, -1.0, 3.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 20.0 - 8.0, 1e-12);
}

TEST(Quadrature, Oscillatory) {
  const auto r = integrate([](double x) { return std::sin(20 * x); }, 0.0, M_PI / 4);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, (1.0 - std::cos(5 * M_PI)) / 20.0, 1e-11);
}

TEST(Quadrature, EndpointSingularity) {
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 2.0, 1e-7);
}

TEST(Quadrature, SemiInfinite) {
  const auto r = integrate_to_infinity([](double x) { return std::exp(-x * x / 2); }, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, std::sqrt(2 * M_PI) * 0.5 * std::erfc(1.0 / std::sqrt(2.0)), 1e-12);
  const auto m = integrate_to_infinity([](double x) { return x * std::exp(-x); }, 0.0);
  EXPECT_NEAR(m.value, 1.0, 1e-11);
}

TEST(Quadrature, ReversedBoundsNegate) {
  const auto f = [](double x) { return std::exp(x); };
  EXPECT_NEAR(integrate(f, 1.0, 0.0).value, -(M_E - 1.0), 1e-12);
}

}  // namespace
}  // namespace prda
