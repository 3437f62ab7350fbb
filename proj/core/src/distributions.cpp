// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "prda/error.hpp"

namespace prda {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Acklam's rational approximation (relative error 1.15e-9), refined below.
double acklam_quantile(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Continued fraction for I_x(a, b) (modified Lentz); valid for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 100000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) return h;
  }
  throw NumericFailure("incomplete beta continued fraction did not converge");
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

double normal_pdf(double x) noexcept { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_sf(double x) noexcept { return 0.5 * std::erfc(x * kInvSqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw InvalidParameter("p", "probability must lie in [0, 1]");
  }
  double x = acklam_quantile(p);
  // One Halley step against the erfc-based CDF.
  const double e = (p < 0.5 ? normal_cdf(x) - p : (1.0 - p) - normal_sf(x));
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double incomplete_beta(double a, double b, double x, double y) {
  if (!(a > 0.0 && b > 0.0)) throw InvalidParameter("a,b", "shape parameters must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidParameter("x", "must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (y == 0.0) return 1.0;
  const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * beta_continued_fraction(b, a, y) / b;
}

double incomplete_beta(double a, double b, double x) { return incomplete_beta(a, b, x, 1.0 - x); }

double central_t_pdf(double x, double df) {
  if (!(df > 0.0)) throw InvalidParameter("df", "degrees of freedom must be positive");
  const double log_norm = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                          0.5 * std::log(df * std::numbers::pi);
  return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

double central_t_cdf(double x, double df) {
  if (!(df > 0.0)) throw InvalidParameter("df", "degrees of freedom must be positive");
  if (std::isnan(x)) throw InvalidParameter("x", "must not be NaN");
  if (x == 0.0) return 0.5;
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  const double x2 = x * x;
  // Tail mass P(|T| > |x|) = I_{df/(df+x^2)}(df/2, 1/2).
  const double tail = incomplete_beta(0.5 * df, 0.5, df / (df + x2), x2 / (df + x2));
  return x > 0.0 ? 1.0 - 0.5 * tail : 0.5 * tail;
}

double central_t_quantile(double p, double df) {
  if (!(df > 0.0)) throw InvalidParameter("df", "degrees of freedom must be positive");
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("p", "probability must lie in (0, 1)");
  if (p == 0.5) return 0.0;
  if (df == 1.0) return std::tan(std::numbers::pi * (p - 0.5));
  if (df == 2.0) {
    const double a = 4.0 * p * (1.0 - p);
    return 2.0 * (p - 0.5) * std::sqrt(2.0 / a);
  }
  // Work in the upper half and mirror.
  const bool lower = p < 0.5;
  const double q = lower ? p : 1.0 - p;  // lower-tail mass of -|x|
  const double z = normal_quantile(1.0 - q);
  // Cornish-Fisher start.
  const double z2 = z * z;
  double x = z + (z2 + 1.0) * z / (4.0 * df) +
             ((5.0 * z2 + 16.0) * z2 + 3.0) * z / (96.0 * df * df);
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    const double f = central_t_cdf(-x, df) - q;  // decreasing in x
    if (f > 0.0) lo = x; else hi = x;
    const double step = f / central_t_pdf(x, df);
    double next = x + step;
    if (!(next > lo && next < hi)) {
      next = std::isinf(hi) ? 2.0 * x + 1.0 : 0.5 * (lo + hi);
    }
    if (std::fabs(next - x) <= 1e-14 * std::fabs(x)) {
      x = next;
      break;
    }
    x = next;
  }
  return lower ? -x : x;
}

double truncated_normal_draw(double lower, double upper, double mu, double sigma,
                             Generator& gen) {
  if (!(lower < upper)) throw InvalidParameter("limits", "lower bound must be below upper bound");
  if (!(sigma > 0.0)) throw InvalidParameter("sigma", "must be positive");
  const double a = (lower - mu) / sigma;
  const double b = (upper - mu) / sigma;
  const double u = gen.uniform();
  double z;
  if (a > 0.0) {
    // Both bounds in the right tail: invert through survival probabilities.
    const double qa = normal_sf(a);
    const double qb = normal_sf(b);
    z = -normal_quantile(qa - u * (qa - qb));
  } else {
    const double pa = normal_cdf(a);
    const double pb = normal_cdf(b);
    z = normal_quantile(pa + u * (pb - pa));
  }
  const double x = mu + sigma * z;
  return x < lower ? lower : (x > upper ? upper : x);
}

double truncated_normal_draw(double lower, double upper, double mu, double sigma,
                             RandomSource rng) {
  Generator gen(rng);
  return truncated_normal_draw(lower, upper, mu, sigma, gen);
}

}  // namespace prda
