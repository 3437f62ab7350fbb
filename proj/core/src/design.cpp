// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/design.hpp"

#include <algorithm>
#include <cmath>

#include "prda/distributions.hpp"
#include "prda/error.hpp"
#include "prda/ttest.hpp"

namespace prda {
namespace {

constexpr std::size_t kChunk = 256;

struct Tally {
  std::int64_t significant = 0;
  std::int64_t wrong_sign = 0;
  double sum_abs_d = 0.0;
};

struct Draw {
  double d_hat;
  double t;
};

// Mean and sum of squared deviations of n standard normal deviates.
inline void noise_moments(Generator& gen, int n, double& mean, double& ss) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = gen.normal();
    sum += z;
    sum_sq += z * z;
  }
  mean = sum / n;
  ss = std::max(0.0, sum_sq - sum * mean);
}

class Replicator {
 public:
  Replicator(const DesignSpec& spec, RandomSource rng)
      : spec_(spec),
        rng_(rng),
        noise_sign_(spec.d_reference > 0.0 ? 1.0 : -1.0),
        scale_(std::sqrt(1.0 / spec.n1 + 1.0 / spec.n2)),
        df_(spec.n1 + spec.n2 - 2),
        t_crit_(central_t_quantile(1.0 - spec.alpha / 2.0, df_)) {}

  Draw draw(std::size_t i) const {
    const RandomSource rep = rng_.substream(i);
    Generator ga(rep.substream(0));
    Generator gb(rep.substream(1));
    double mean_a, ss_a, mean_b, ss_b;
    noise_moments(ga, spec_.n1, mean_a, ss_a);
    noise_moments(gb, spec_.n2, mean_b, ss_b);
    // Noise is reflected with the reference sign so that (-d, -ref) mirrors (d, ref).
    const double diff = spec_.d_true + noise_sign_ * (mean_a - mean_b);
    const double sp = std::sqrt((ss_a + ss_b) / df_);
    const double d_hat = diff / sp;
    return {d_hat, d_hat / scale_};
  }

  bool significant(double t) const { return std::fabs(t) > t_crit_; }

  bool wrong_sign(double d_hat) const { return (d_hat > 0.0) != (spec_.d_reference > 0.0); }

  int df() const { return df_; }

 private:
  DesignSpec spec_;
  RandomSource rng_;
  double noise_sign_;
  double scale_;
  int df_;
  double t_crit_;
};

}  // namespace

void DesignSpec::validate() const {
  if (n1 < 2) throw InvalidParameter("n1", "group size must be at least 2");
  if (n2 < 2) throw InvalidParameter("n2", "group size must be at least 2");
  if (B < 1) throw InvalidParameter("B", "number of replicates must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("sigLevel", "must lie in (0, 1)");
  if (!std::isfinite(d_true)) throw InvalidParameter("d", "effect size must be finite");
  if (!std::isfinite(d_reference)) throw InvalidParameter("d", "reference effect must be finite");
  if (d_reference == 0.0) {
    throw InvalidParameter("d", "the plausible effect size must be nonzero (Type M divides by it)");
  }
}

RandomSource design_point_source(std::uint64_t seed, std::size_t grid_index) noexcept {
  return RandomSource{seed, 0}.substream(grid_index);
}

DesignResult simulate_replications(const DesignSpec& spec, RandomSource rng,
                                   const ExecutionPolicy& policy) {
  spec.validate();
  const Replicator rep(spec, rng);
  const std::size_t total = static_cast<std::size_t>(spec.B);
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Tally> tallies(chunks);

  parallel_for(chunks, policy, [&](std::size_t c) {
    Tally tally;
    const std::size_t end = std::min(total, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const Draw d = rep.draw(i);
      if (!rep.significant(d.t)) continue;
      ++tally.significant;
      tally.sum_abs_d += std::fabs(d.d_hat);
      if (rep.wrong_sign(d.d_hat)) ++tally.wrong_sign;
    }
    tallies[c] = tally;
  });

  // Chunk order is fixed, so the floating-point sum is schedule-independent.
  Tally sum;
  for (const Tally& t : tallies) {
    sum.significant += t.significant;
    sum.wrong_sign += t.wrong_sign;
    sum.sum_abs_d += t.sum_abs_d;
  }

  DesignResult out;
  out.B = spec.B;
  out.alpha = spec.alpha;
  out.d_true = spec.d_true;
  out.d_reference = spec.d_reference;
  out.n1 = spec.n1;
  out.n2 = spec.n2;
  out.n_significant = sum.significant;
  out.power = static_cast<double>(sum.significant) / spec.B;
  if (sum.significant > 0) {
    out.type_s = static_cast<double>(sum.wrong_sign) / static_cast<double>(sum.significant);
    out.type_m = sum.sum_abs_d / static_cast<double>(sum.significant) /
                 std::fabs(spec.d_reference);
  }
  return out;
}

std::vector<ReplicationOutcome> replicate(const DesignSpec& spec, RandomSource rng) {
  spec.validate();
  const Replicator rep(spec, rng);
  std::vector<ReplicationOutcome> out(static_cast<std::size_t>(spec.B));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Draw d = rep.draw(i);
    auto& o = out[i];
    o.d_hat = d.d_hat;
    o.t = d.t;
    o.p_value = two_sided_p(d.t, rep.df());
    o.significant = rep.significant(d.t);
    o.wrong_sign = o.significant && rep.wrong_sign(d.d_hat);
  }
  return out;
}

DesignResult retrospective(double d, int n1, int n2, double alpha, int B, std::uint64_t seed,
                           const ExecutionPolicy& policy) {
  return simulate_replications({d, n1, n2, B, alpha, d}, design_point_source(seed), policy);
}

std::vector<SensitivityPoint> sensitivity_curve(double d, std::span<const int> n_grid,
                                                double alpha, int B, std::uint64_t seed,
                                                const ExecutionPolicy& policy) {
  if (n_grid.empty()) throw InvalidParameter("nGrid", "grid must contain at least one n");
  for (int n : n_grid) {
    if (n < 2) throw InvalidParameter("nGrid", "every n must be at least 2");
  }
  std::vector<SensitivityPoint> out;
  out.reserve(n_grid.size());
  for (std::size_t g = 0; g < n_grid.size(); ++g) {
    const int n = n_grid[g];
    out.push_back({n, simulate_replications({d, n, n, B, alpha, d},
                                            design_point_source(seed, g), policy)});
  }
  return out;
}

}  // namespace prda
