// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prda/parallel.hpp"
#include "prda/random.hpp"

namespace prda {

/// One simulated two-group design: groups drawn from Normal(d_true, 1) and
/// Normal(0, 1), tested with a two-sided pooled t-test at level alpha. Type S
/// and Type M are measured against d_reference.
struct DesignSpec {
  double d_true = 0.0;
  int n1 = 0;
  int n2 = 0;
  int B = 10000;
  double alpha = 0.05;
  double d_reference = 0.0;

  void validate() const;
};

struct DesignResult {
  double power = 0.0;
  /// Share of significant replicates whose sign disagrees with d_reference;
  /// 0 when nothing was significant.
  double type_s = 0.0;
  /// Mean |d_hat| over significant replicates divided by |d_reference|.
  /// Empty when no replicate was significant.
  std::optional<double> type_m;
  std::int64_t n_significant = 0;
  int B = 0;
  double alpha = 0.0;
  double d_true = 0.0;
  double d_reference = 0.0;
  int n1 = 0;
  int n2 = 0;
};

struct ReplicationOutcome {
  double d_hat = 0.0;
  double t = 0.0;
  double p_value = 1.0;
  bool significant = false;
  bool wrong_sign = false;
};

/// Random source for one point of a job: grid index 0 is what a plain
/// retrospective run uses, so a one-point grid reproduces it exactly.
RandomSource design_point_source(std::uint64_t seed, std::size_t grid_index = 0) noexcept;

/// Runs spec.B replicated experiments. Replicate i reads only from
/// rng.substream(i), so the result does not depend on policy.workers.
DesignResult simulate_replications(const DesignSpec& spec, RandomSource rng,
                                   const ExecutionPolicy& policy = {});

/// Same replicates as simulate_replications, returned one by one.
std::vector<ReplicationOutcome> replicate(const DesignSpec& spec, RandomSource rng);

DesignResult retrospective(double d, int n1, int n2, double alpha, int B, std::uint64_t seed,
                           const ExecutionPolicy& policy = {});

inline DesignResult retrospective(double d, int n_per_group, double alpha, int B,
                                  std::uint64_t seed, const ExecutionPolicy& policy = {}) {
  return retrospective(d, n_per_group, n_per_group, alpha, B, seed, policy);
}

struct SensitivityPoint {
  int n = 0;
  DesignResult result;
};

/// Equal-group design evaluated at every n of the grid, one substream per point.
std::vector<SensitivityPoint> sensitivity_curve(double d, std::span<const int> n_grid,
                                                double alpha, int B, std::uint64_t seed,
                                                const ExecutionPolicy& policy = {});

}  // namespace prda
