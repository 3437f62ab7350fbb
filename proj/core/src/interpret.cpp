// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/interpret.hpp"

#include <cmath>
#include <numbers>

#include "prda/distributions.hpp"
#include "prda/error.hpp"

namespace prda {

std::string_view to_string(EffectLabel label) noexcept {
  switch (label) {
    case EffectLabel::negligible: return "negligible";
    case EffectLabel::small: return "small";
    case EffectLabel::medium: return "medium";
    case EffectLabel::large: return "large";
  }
  return "negligible";
}

double common_language(double d) { return normal_cdf(d / std::numbers::sqrt2); }

double u3(double d) { return normal_cdf(d); }

EffectLabel benchmark_label(double d) {
  const double a = std::fabs(d);
  if (a >= 0.8) return EffectLabel::large;
  if (a >= 0.5) return EffectLabel::medium;
  if (a >= 0.2) return EffectLabel::small;
  return EffectLabel::negligible;
}

EffectInterpretation interpret_effect(double d) {
  if (!std::isfinite(d)) throw InvalidParameter("d", "effect size must be finite");
  EffectInterpretation out;
  out.d = d;
  out.ci_low = out.ci_high = d;
  out.cl = common_language(d);
  out.u3 = u3(d);
  out.label = benchmark_label(d);
  return out;
}

EffectInterpretation interpret_from_summaries(const SampleSummary& a, const SampleSummary& b,
                                              double level) {
  if (!(level > 0.0 && level < 1.0)) throw InvalidParameter("level", "must lie in (0, 1)");
  const double d = cohens_d_estimate(a, b);
  const double n1 = a.n;
  const double n2 = b.n;
  const double se = std::sqrt((n1 + n2) / (n1 * n2) + d * d / (2.0 * (n1 + n2)));
  const double z = normal_quantile(0.5 + 0.5 * level);
  EffectInterpretation out = interpret_effect(d);
  out.level = level;
  out.ci_low = d - z * se;
  out.ci_high = d + z * se;
  return out;
}

}  // namespace prda
