// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/prospective.hpp"

#include <cmath>
#include <map>

#include "prda/error.hpp"

namespace prda {

void ProspectiveSpec::validate() const {
  if (!std::isfinite(d) || d == 0.0) {
    throw InvalidParameter("d", "the plausible effect size must be nonzero");
  }
  if (!(target_power > 0.0 && target_power < 1.0)) {
    throw InvalidParameter("power", "target power must lie in (0, 1)");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("sigLevel", "must lie in (0, 1)");
  if (range.lower < 2) throw InvalidParameter("rangen", "lower bound must be at least 2");
  if (range.upper <= range.lower) {
    throw InvalidParameter("rangen", "upper bound must exceed the lower bound");
  }
  if (!(tol > 0.0 && tol < 1.0)) throw InvalidParameter("tol", "must lie in (0, 1)");
  if (B < 1) throw InvalidParameter("B", "number of replicates must be at least 1");
}

ProspectiveResult find_sample_size(const ProspectiveSpec& spec, std::uint64_t seed,
                                   const ExecutionPolicy& policy) {
  spec.validate();
  const RandomSource rng = design_point_source(seed);
  std::map<int, DesignResult> probed;
  auto at = [&](int n) -> const DesignResult& {
    auto it = probed.find(n);
    if (it == probed.end()) {
      it = probed.emplace(n, simulate_replications({spec.d, n, n, spec.B, spec.alpha, spec.d},
                                                   rng, policy))
               .first;
    }
    return it->second;
  };

  auto finish = [&](int n) {
    return ProspectiveResult{n,           at(n),     spec.target_power,
                             spec.range,  spec.tol,  static_cast<int>(probed.size())};
  };

  if (at(spec.range.lower).power >= spec.target_power) return finish(spec.range.lower);

  // Invariant: power(lo) < target; power(hi) >= target is assumed and checked
  // only if the search ends at the upper bound.
  int lo = spec.range.lower;
  int hi = spec.range.upper;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (at(mid).power >= spec.target_power) hi = mid; else lo = mid;
  }

  if (hi == spec.range.upper) {
    const double top = at(hi).power;
    if (top < spec.target_power - spec.tol) {
      throw UnreachablePower(hi, top, spec.target_power);
    }
  }
  return finish(hi);
}

}  // namespace prda
