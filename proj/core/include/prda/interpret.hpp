// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "prda/ttest.hpp"

namespace prda {

/// Cohen's conventional bands on |d|: [0,.2) negligible, [.2,.5) small,
/// [.5,.8) medium, [.8,inf) large. The anchors are relative to the research
/// area and are only a fallback when nothing better is known.
enum class EffectLabel { negligible, small, medium, large };

std::string_view to_string(EffectLabel label) noexcept;

struct EffectInterpretation {
  double d = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double level = 0.95;
  double cl = 0.5;
  double u3 = 0.5;
  EffectLabel label = EffectLabel::negligible;
};

/// Probability that a random member of the higher group exceeds a random
/// member of the other: Phi(d / sqrt 2).
double common_language(double d);

/// Share of the higher group above the other group's mean: Phi(d).
double u3(double d);

EffectLabel benchmark_label(double d);

/// d from the summaries with a large-sample normal CI using
/// var(d) = (n1 + n2) / (n1 n2) + d^2 / (2 (n1 + n2)).
EffectInterpretation interpret_from_summaries(const SampleSummary& a, const SampleSummary& b,
                                              double level = 0.95);

/// CL, U3 and label for a bare d; the interval collapses to d.
EffectInterpretation interpret_effect(double d);

}  // namespace prda
