// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/effect_model.hpp"

#include <cmath>

#include "prda/distributions.hpp"
#include "prda/error.hpp"

namespace prda {
namespace {

constexpr std::uint64_t kPriorTag = 0x7072696F72ull;     // "prior"
constexpr std::uint64_t kEngineTag = 0x656E67696E65ull;  // "engine"

void check_interval(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw InvalidParameter("limits", "interval bounds must be finite");
  }
  if (!(lower < upper)) throw InvalidParameter("limits", "lower limit must be below upper limit");
}

double draw_one(const EffectPrior& prior, RandomSource rng) {
  switch (prior.kind()) {
    case PriorKind::point:
      return prior.value();
    case PriorKind::uniform: {
      Generator gen(rng);
      const double x = prior.lower() + gen.uniform() * (prior.upper() - prior.lower());
      return x > prior.upper() ? prior.upper() : x;
    }
    case PriorKind::truncated_normal:
      return truncated_normal_draw(prior.lower(), prior.upper(), prior.center(), prior.sigma(),
                                   rng);
  }
  return prior.value();
}

}  // namespace

std::string_view to_string(PriorKind kind) noexcept {
  switch (kind) {
    case PriorKind::point: return "point";
    case PriorKind::uniform: return "uniform";
    case PriorKind::truncated_normal: return "normal";
  }
  return "point";
}

EffectPrior EffectPrior::point(double value) {
  if (!std::isfinite(value)) throw InvalidParameter("targetD", "effect size must be finite");
  EffectPrior p;
  p.kind_ = PriorKind::point;
  p.value_ = value;
  p.lower_ = p.upper_ = value;
  return p;
}

EffectPrior EffectPrior::uniform(double lower, double upper) {
  check_interval(lower, upper);
  EffectPrior p;
  p.kind_ = PriorKind::uniform;
  p.lower_ = lower;
  p.upper_ = upper;
  return p;
}

EffectPrior EffectPrior::truncated_normal(double lower, double upper, double k) {
  check_interval(lower, upper);
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidParameter("k", "must be positive");
  EffectPrior p;
  p.kind_ = PriorKind::truncated_normal;
  p.lower_ = lower;
  p.upper_ = upper;
  p.k_ = k;
  return p;
}

double EffectPrior::center() const noexcept {
  return kind_ == PriorKind::point ? value_ : 0.5 * (lower_ + upper_);
}

double EffectPrior::sigma() const noexcept {
  return kind_ == PriorKind::truncated_normal ? k_ * (upper_ - lower_) : 0.0;
}

EffectPrior build_prior(const PriorSpec& spec) {
  const bool has_point = spec.target_d.has_value();
  const bool has_lower = spec.lower.has_value();
  const bool has_upper = spec.upper.has_value();
  if (has_lower != has_upper) {
    throw InvalidParameter("limits", "both interval limits are required");
  }
  if (has_point == has_lower) {
    throw InvalidParameter("targetD", "provide either targetD or limits, not both or neither");
  }
  if (has_point) return EffectPrior::point(*spec.target_d);
  if (spec.distribution == "uniform") return EffectPrior::uniform(*spec.lower, *spec.upper);
  if (spec.distribution == "normal") {
    return EffectPrior::truncated_normal(*spec.lower, *spec.upper, spec.k);
  }
  throw InvalidParameter("distribution", "must be \"uniform\" or \"normal\"");
}

std::vector<double> sample_prior(const EffectPrior& prior, std::size_t count, RandomSource rng) {
  if (count < 1) throw InvalidParameter("B0", "must draw at least one effect");
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = draw_one(prior, rng.substream(j));
  return out;
}

void DesignEstSpec::validate() const {
  if (n1 < 2) throw InvalidParameter("n1", "group size must be at least 2");
  if (n2 < 2) throw InvalidParameter("n2", "group size must be at least 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("sigLevel", "must lie in (0, 1)");
  if (B < 1) throw InvalidParameter("B", "number of replicates must be at least 1");
  if (B0 < 1) throw InvalidParameter("B0", "must draw at least one effect");
  if (prior.center() == 0.0) {
    throw InvalidParameter(prior.is_interval() ? "limits" : "targetD",
                           "the plausible effect must not be centred on zero");
  }
}

DesignEstResult design_est(const DesignEstSpec& spec, std::uint64_t seed,
                           const ExecutionPolicy& policy) {
  spec.validate();
  const RandomSource root{seed, 0};
  const double reference = spec.prior.center();

  DesignEstResult out;
  out.B = spec.B;
  out.B0 = spec.B0;
  out.prior = spec.prior;

  if (!spec.prior.is_interval()) {
    const DesignResult r = simulate_replications(
        {reference, spec.n1, spec.n2, spec.B, spec.alpha, reference},
        root.substream(kEngineTag).substream(0), policy);
    out.power = r.power;
    out.type_s = r.type_s;
    out.type_m = r.type_m;
    out.undefined_type_m = r.type_m ? 0 : 1;
    return out;
  }

  const std::vector<double> effects =
      sample_prior(spec.prior, static_cast<std::size_t>(spec.B0), root.substream(kPriorTag));
  const RandomSource engine = root.substream(kEngineTag);
  std::vector<PriorDraw> rows(effects.size());
  const ExecutionPolicy inner{1};
  parallel_for(rows.size(), policy, [&](std::size_t i) {
    const DesignResult r = simulate_replications(
        {effects[i], spec.n1, spec.n2, spec.B, spec.alpha, reference}, engine.substream(i),
        inner);
    rows[i] = {effects[i], r.power, r.type_s, r.type_m};
  });

  double sum_power = 0.0;
  double sum_type_s = 0.0;
  double sum_type_m = 0.0;
  int defined = 0;
  for (const PriorDraw& row : rows) {
    sum_power += row.power;
    sum_type_s += row.type_s;
    if (row.type_m) {
      sum_type_m += *row.type_m;
      ++defined;
    }
  }
  out.power = sum_power / static_cast<double>(rows.size());
  out.type_s = sum_type_s / static_cast<double>(rows.size());
  if (defined > 0) out.type_m = sum_type_m / defined;
  out.undefined_type_m = static_cast<int>(rows.size()) - defined;
  if (spec.return_data) out.per_draw = std::move(rows);
  return out;
}

}  // namespace prda
