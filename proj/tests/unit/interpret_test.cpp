// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include <prda/error.hpp>
#include <prda/interpret.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace prda {
namespace {

TEST(Interpret, CommonLanguageAndU3) {
  const double expected[][3] = {{0.2, 0.56, 0.58}, {0.5, 0.64, 0.69}, {0.8, 0.71, 0.79}};
  for (const auto& row : expected) {
    EXPECT_NEAR(common_language(row[0]), row[1], 0.005);
    EXPECT_NEAR(u3(row[0]), row[2], 0.005);
  }
  EXPECT_DOUBLE_EQ(common_language(0.0), 0.5);
  EXPECT_DOUBLE_EQ(u3(0.0), 0.5);
  EXPECT_NEAR(common_language(-0.5) + common_language(0.5), 1.0, 1e-15);
  EXPECT_NEAR(u3(-0.8) + u3(0.8), 1.0, 1e-15);
}

TEST(Interpret, Labels) {
  EXPECT_EQ(benchmark_label(0.1), EffectLabel::negligible);
  EXPECT_EQ(benchmark_label(0.2), EffectLabel::small);
  EXPECT_EQ(benchmark_label(-0.49), EffectLabel::small);
  EXPECT_EQ(benchmark_label(0.5), EffectLabel::medium);
  EXPECT_EQ(benchmark_label(0.9), EffectLabel::large);
  EXPECT_EQ(to_string(EffectLabel::medium), "medium");
}

TEST(Interpret, TableOneConfidenceInterval) {
  const EffectInterpretation e = interpret_from_summaries({31, 114, 16}, {31, 100, 15});
  EXPECT_NEAR(e.d, 0.90, 0.01);
  EXPECT_NEAR(e.ci_low, 0.38, 0.01);
  EXPECT_NEAR(e.ci_high, 1.43, 0.01);
  EXPECT_EQ(e.label, EffectLabel::large);
  const EffectInterpretation w = interpret_from_summaries({31, 114, 16}, {31, 100, 15}, 0.99);
  EXPECT_LT(w.ci_low, e.ci_low);
  EXPECT_GT(w.ci_high, e.ci_high);
}

TEST(Interpret, Antisymmetric) {
  const EffectInterpretation a = interpret_from_summaries({20, 5, 2}, {25, 4, 3});
  const EffectInterpretation b = interpret_from_summaries({25, 4, 3}, {20, 5, 2});
  EXPECT_DOUBLE_EQ(a.d, -b.d);
  EXPECT_NEAR(a.ci_low, -b.ci_high, 1e-14);
  EXPECT_NEAR(a.cl + b.cl, 1.0, 1e-14);
}

TEST(Interpret, Validation) {
  EXPECT_THROW(interpret_effect(NAN), InvalidParameter);
  EXPECT_THROW(interpret_from_summaries({31, 1, 1}, {31, 0, 1}, 1.0), InvalidParameter);
  EXPECT_THROW(interpret_from_summaries({31, 1, 0}, {31, 0, 0}), InvalidParameter);
}

}  // namespace
}  // namespace prda
