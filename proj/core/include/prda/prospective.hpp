// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "prda/design.hpp"

namespace prda {

struct SearchRange {
  int lower = 2;
  int upper = 1000;
};

struct ProspectiveSpec {
  double d = 0.0;
  double target_power = 0.8;
  double alpha = 0.05;
  SearchRange range;
  /// Shortfall tolerated at range.upper before the search reports
  /// UnreachablePower.
  double tol = 0.005;
  int B = 10000;

  void validate() const;
};

struct ProspectiveResult {
  int n_per_group = 0;
  DesignResult achieved;
  double target_power = 0.0;
  SearchRange range;
  double tol = 0.0;
  /// Number of distinct n values simulated during the search.
  int probes = 0;
};

/// Smallest per-group n in spec.range whose estimated power reaches the
/// target, by integer bisection. Every probed n reuses the same replicate
/// substreams (common random numbers), and the design at the returned n is
/// exactly retrospective(d, n, alpha, B, seed).
ProspectiveResult find_sample_size(const ProspectiveSpec& spec, std::uint64_t seed,
                                   const ExecutionPolicy& policy = {});

}  // namespace prda
