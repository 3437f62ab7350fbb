// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "prda/design.hpp"
#include "prda/random.hpp"

namespace prda {

enum class PriorKind { point, uniform, truncated_normal };

std::string_view to_string(PriorKind kind) noexcept;

/// Hypothesis about the true Cohen's d: a single value, a flat plausible
/// interval, or a normal centred on the interval and truncated to it with
/// sd = k * (upper - lower).
class EffectPrior {
 public:
  static EffectPrior point(double value);
  static EffectPrior uniform(double lower, double upper);
  static EffectPrior truncated_normal(double lower, double upper, double k = 1.0 / 6.0);

  PriorKind kind() const noexcept { return kind_; }
  bool is_interval() const noexcept { return kind_ != PriorKind::point; }
  double value() const noexcept { return value_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double k() const noexcept { return k_; }

  /// Point value, or the interval midpoint. Type M is measured against it.
  double center() const noexcept;
  /// Truncated-normal scale; 0 for the other kinds.
  double sigma() const noexcept;

 private:
  EffectPrior() = default;

  PriorKind kind_ = PriorKind::point;
  double value_ = 0.0;
  double lower_ = 0.0;
  double upper_ = 0.0;
  double k_ = 0.0;
};

/// Loose description as it arrives from a request.
struct PriorSpec {
  std::optional<double> target_d;
  std::optional<double> lower;
  std::optional<double> upper;
  std::string_view distribution = "uniform";
  double k = 1.0 / 6.0;
};

/// Exactly one of target_d or (lower, upper) must be present.
EffectPrior build_prior(const PriorSpec& spec);

/// Draw j uses rng.substream(j), so any single draw can be reproduced alone.
std::vector<double> sample_prior(const EffectPrior& prior, std::size_t count, RandomSource rng);

struct PriorDraw {
  double d = 0.0;
  double power = 0.0;
  double type_s = 0.0;
  std::optional<double> type_m;
};

struct DesignEstSpec {
  int n1 = 0;
  int n2 = 0;
  EffectPrior prior = EffectPrior::point(0.5);
  double alpha = 0.05;
  int B = 500;
  int B0 = 500;
  bool return_data = false;

  void validate() const;
};

struct DesignEstResult {
  double power = 0.0;
  double type_s = 0.0;
  /// Mean of the per-draw Type M values that are defined.
  std::optional<double> type_m;
  /// Draws with no significant replicate (left out of the Type M mean).
  int undefined_type_m = 0;
  int B = 0;
  int B0 = 0;
  EffectPrior prior = EffectPrior::point(0.5);
  /// Present when return_data was requested and the prior is an interval.
  std::optional<std::vector<PriorDraw>> per_draw;
};

/// Retrospective design analysis under an effect-size prior. For interval
/// priors, B0 effects are drawn and each is simulated with B replicates,
/// measuring Type S and Type M against prior.center(). A point prior runs
/// one design with B replicates.
DesignEstResult design_est(const DesignEstSpec& spec, std::uint64_t seed,
                           const ExecutionPolicy& policy = {});

}  // namespace prda
