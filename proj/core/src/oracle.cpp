// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "prda/distributions.hpp"
#include "prda/error.hpp"
#include "prda/quadrature.hpp"

namespace prda {
namespace {

constexpr double kSeriesCutoff = 1e-18;

void check_design(double d, int n1, int n2, double alpha) {
  if (!std::isfinite(d)) throw InvalidParameter("d", "effect size must be finite");
  if (n1 < 2) throw InvalidParameter("n1", "group size must be at least 2");
  if (n2 < 2) throw InvalidParameter("n2", "group size must be at least 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("sigLevel", "must lie in (0, 1)");
}

// F(x; df, delta) for x >= 0:
//   Phi(-delta) + 1/2 sum_j [ P_j I_y(j + 1/2, df/2) + Q_j I_y(j + 1, df/2) ],
// with y = x^2 / (x^2 + df), P_j Poisson(delta^2 / 2) weights and Q_j the
// matching half-integer weights carrying the sign of delta.
double cdf_nonnegative(double x, double df, double delta) {
  const double x2 = x * x;
  const double y = x2 / (x2 + df);
  const double y_c = df / (x2 + df);
  const double half_b = 0.5 * df;
  if (delta == 0.0) return 0.5 + 0.5 * incomplete_beta(0.5, half_b, y, y_c);
  if (y == 0.0) return normal_cdf(-delta);

  const double lambda = 0.5 * delta * delta;
  const double log_lambda = std::log(lambda);
  const double q_factor = delta / std::numbers::sqrt2;
  auto term = [&](double j, double& weight) {
    const double log_common = -lambda + j * log_lambda;
    const double p = std::exp(log_common - std::lgamma(j + 1.0));
    const double q = q_factor * std::exp(log_common - std::lgamma(j + 1.5));
    weight = p + std::fabs(q);
    double t = 0.0;
    if (p > 0.0) t += p * incomplete_beta(j + 0.5, half_b, y, y_c);
    if (q != 0.0) t += q * incomplete_beta(j + 1.0, half_b, y, y_c);
    return t;
  };

  const double mode = std::floor(lambda);
  double sum = 0.0;
  double weight = 0.0;
  for (double j = mode;; j += 1.0) {
    sum += term(j, weight);
    if (weight < kSeriesCutoff && j > lambda) break;
    if (j - mode > 1e6) throw NumericFailure("noncentral t series did not converge");
  }
  for (double j = mode - 1.0; j >= 0.0; j -= 1.0) {
    sum += term(j, weight);
    if (weight < kSeriesCutoff) break;
  }
  const double cdf = normal_cdf(-delta) + 0.5 * sum;
  return cdf < 0.0 ? 0.0 : (cdf > 1.0 ? 1.0 : cdf);
}

// Upper tail P(T > x) for x >= 0.
double sf_nonnegative(double x, double df, double delta) {
  return 1.0 - cdf_nonnegative(x, df, delta);
}

struct TailMasses {
  double upper;  // P(T > t_crit)
  double lower;  // P(T < -t_crit)
};

TailMasses tails(const NoncentralSpec& s) {
  return {sf_nonnegative(s.t_crit, s.df, s.ncp), sf_nonnegative(s.t_crit, s.df, -s.ncp)};
}

}  // namespace

NoncentralSpec make_noncentral_spec(double d, int n1, int n2, double alpha) {
  check_design(d, n1, n2, alpha);
  NoncentralSpec s;
  s.df = n1 + n2 - 2;
  s.scale = std::sqrt(1.0 / n1 + 1.0 / n2);
  s.ncp = d / s.scale;
  s.t_crit = central_t_quantile(1.0 - alpha / 2.0, s.df);
  return s;
}

double noncentral_t_cdf(double x, double df, double ncp) {
  if (!(df >= 1.0)) throw InvalidParameter("df", "degrees of freedom must be at least 1");
  if (std::isnan(x) || !std::isfinite(ncp)) throw InvalidParameter("x", "must be a number");
  if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
  if (x >= 0.0) return cdf_nonnegative(x, df, ncp);
  return sf_nonnegative(-x, df, -ncp);
}

double noncentral_t_pdf(double x, double df, double ncp) {
  if (!(df >= 1.0)) throw InvalidParameter("df", "degrees of freedom must be at least 1");
  if (std::fabs(x) > std::sqrt(df * 2.220446049250313e-16)) {
    const double diff = noncentral_t_cdf(x * std::sqrt((df + 2.0) / df), df + 2.0, ncp) -
                        noncentral_t_cdf(x, df, ncp);
    const double f = df / x * diff;
    return f > 0.0 ? f : 0.0;
  }
  return std::exp(std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                  0.5 * std::log(std::numbers::pi * df) - 0.5 * ncp * ncp);
}

double exact_power(double d, int n1, int n2, double alpha) {
  const TailMasses m = tails(make_noncentral_spec(d, n1, n2, alpha));
  return m.upper + m.lower;
}

double exact_type_s(double d, int n1, int n2, double alpha) {
  if (d == 0.0) throw InvalidParameter("d", "Type S needs a nonzero plausible effect");
  const TailMasses m = tails(make_noncentral_spec(d, n1, n2, alpha));
  const double wrong = d > 0.0 ? m.lower : m.upper;
  return wrong / (m.upper + m.lower);
}

double exact_type_m(double d, int n1, int n2, double alpha) {
  if (d == 0.0) throw InvalidParameter("d", "Type M needs a nonzero plausible effect");
  const NoncentralSpec s = make_noncentral_spec(d, n1, n2, alpha);
  if (s.df < 2) throw NumericFailure("E|T| is infinite with one degree of freedom");
  const TailMasses m = tails(s);

  QuadratureOptions opts;
  opts.rel_tol = 1e-8;
  opts.abs_tol = 1e-15;
  const auto upper = integrate_to_infinity(
      [&](double t) { return t * noncentral_t_pdf(t, s.df, s.ncp); }, s.t_crit, opts);
  // The wrong-sign tail only has to be accurate relative to the whole.
  QuadratureOptions tail_opts = opts;
  tail_opts.abs_tol = std::max(opts.abs_tol, 1e-10 * upper.value);
  const auto lower = integrate_to_infinity(
      [&](double t) { return t * noncentral_t_pdf(-t, s.df, s.ncp); }, s.t_crit, tail_opts);
  const double total = upper.value + lower.value;
  const double err = upper.error + lower.error;
  if (!(err <= 1e-6 * total) && err > 1e-13) {
    throw NumericFailure("Type M quadrature did not reach 1e-6 relative tolerance");
  }
  return s.scale * total / (m.upper + m.lower) / std::fabs(d);
}

DesignResult exact_design(double d, int n1, int n2, double alpha) {
  DesignResult r;
  r.d_true = d;
  r.d_reference = d;
  r.alpha = alpha;
  r.n1 = n1;
  r.n2 = n2;
  r.power = exact_power(d, n1, n2, alpha);
  r.type_s = exact_type_s(d, n1, n2, alpha);
  r.type_m = exact_type_m(d, n1, n2, alpha);
  return r;
}

ProspectiveResult exact_sample_size(double d, double target_power, double alpha,
                                    SearchRange range) {
  ProspectiveSpec spec;
  spec.d = d;
  spec.target_power = target_power;
  spec.alpha = alpha;
  spec.range = range;
  spec.validate();

  int probes = 0;
  auto power_at = [&](int n) {
    ++probes;
    return exact_power(d, n, n, alpha);
  };
  int chosen;
  if (power_at(range.lower) >= target_power) {
    chosen = range.lower;
  } else {
    const double top = power_at(range.upper);
    if (top < target_power) throw UnreachablePower(range.upper, top, target_power);
    int lo = range.lower;
    int hi = range.upper;
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (power_at(mid) >= target_power) hi = mid; else lo = mid;
    }
    chosen = hi;
  }
  ProspectiveResult out;
  out.n_per_group = chosen;
  out.achieved = exact_design(d, chosen, chosen, alpha);
  out.target_power = target_power;
  out.range = range;
  out.tol = 0.0;
  out.probes = probes;
  return out;
}

}  // namespace prda
