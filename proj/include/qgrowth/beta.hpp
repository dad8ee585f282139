// SPDX-License-Identifier: Apache-2.0
//
// Lower incomplete beta integral B_x(a,b) = int_0^x t^{a-1} (1-t)^{b-1} dt
// (non-regularized), its restriction to a subinterval, and a bracketing
// inverse. The growth-law parameterization routinely produces a < 1, b < 1
// and b <= 0 (with x < 1), so the evaluator must tolerate integrable
// endpoint singularities at both ends.

#ifndef QGROWTH_BETA_HPP
#define QGROWTH_BETA_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgrowth {

namespace detail {

// Double-exponential (tanh-sinh) quadrature on [lo, hi]. The integrand is
// called as f(dist_lo, dist_hi) with the distances to the two endpoints,
// each computed without cancellation, so algebraic endpoint singularities
// can be evaluated at full precision arbitrarily close to the ends.
//
// min_exponent is the smallest algebraic exponent alpha such that the
// integrand grows no faster than dist^{alpha-1} at an endpoint; it controls
// how far into the tails the node sum must reach.
template <class F>
double tanh_sinh(F&& f, double lo, double hi, double abs_tol, double rel_tol,
                 double min_exponent) {
  if (!(hi > lo)) return 0.0;
  const double half = 0.5 * (hi - lo);
  const double pi_half = 1.57079632679489661923;

  // Node term at transformation abscissa w.
  const auto term_at = [&](double w) -> double {
    const double u = pi_half * std::sinh(w);
    const double au = std::fabs(u);
    const double e2 = std::exp(-2.0 * au);       // in (0, 1]
    const double near = 2.0 * e2 / (1.0 + e2);   // 1 - |tanh(u)|
    const double far = 2.0 / (1.0 + e2);         // 1 + |tanh(u)|
    const double dist_lo = half * (u >= 0.0 ? far : near);
    const double dist_hi = half * (u >= 0.0 ? near : far);
    if (dist_lo == 0.0 || dist_hi == 0.0) return 0.0;
    const double sech = 2.0 * std::exp(-au) / (1.0 + std::exp(-2.0 * au));
    const double weight = pi_half * std::cosh(w) * sech * sech;
    const double v = weight * f(dist_lo, dist_hi);
    return std::isfinite(v) ? v : 0.0;
  };

  const double w_max =
      std::min(7.5, std::asinh(760.0 / (pi_half * 2.0 * std::max(min_exponent, 0.02))));

  // Level 0: h = 1.
  double h = 1.0;
  double sum = term_at(0.0);
  double comp = 0.0;  // Kahan carry
  const auto accumulate = [&](double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (int k = 1; k * h <= w_max; ++k) {
    accumulate(term_at(k * h));
    accumulate(term_at(-k * h));
  }
  double estimate = half * h * sum;

  double previous = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= 10; ++level) {
    h *= 0.5;
    // New nodes sit at odd multiples of the refined h.
    for (double w = h; w <= w_max; w += 2.0 * h) {
      accumulate(term_at(w));
      accumulate(term_at(-w));
    }
    previous = estimate;
    estimate = half * h * sum;
    const double change = std::fabs(estimate - previous);
    if (level >= 2 &&
        change <= 0.5 * std::max(abs_tol, rel_tol * std::fabs(estimate)))
      break;
  }
  return estimate;
}

}  // namespace detail

/// Incomplete beta integral over an interior interval [x1, x2] of [0, 1].
/// a <= 0 is allowed when x1 > 0 and b <= 0 when x2 < 1 (the integrand is
/// then non-integrable at the excluded endpoint).
inline double inc_beta_interval(double a, double b, double x1, double x2) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x1) || !std::isfinite(x2))
    throw std::domain_error("inc_beta: non-finite argument");
  if (x1 < 0.0 || x2 > 1.0 || x1 > x2)
    throw std::domain_error("inc_beta: interval must satisfy 0 <= x1 <= x2 <= 1");
  if (a <= 0.0 && x1 <= 0.0)
    throw std::domain_error("inc_beta: integral diverges at t = 0 for a <= 0");
  if (b <= 0.0 && x2 >= 1.0)
    throw std::domain_error("inc_beta: integral diverges at t = 1 for b <= 0");
  if (x1 == x2) return 0.0;

  const double one_minus_x2 = 1.0 - x2;
  const auto integrand = [&](double dist_lo, double dist_hi) {
    const double t = x1 + dist_lo;
    const double one_minus_t = one_minus_x2 + dist_hi;
    return std::pow(t, a - 1.0) * std::pow(one_minus_t, b - 1.0);
  };
  const double sing_lo = (x1 == 0.0) ? a : 1.0;
  const double sing_hi = (x2 == 1.0) ? b : 1.0;
  return detail::tanh_sinh(integrand, x1, x2, 1e-13, 5e-13,
                           std::min({sing_lo, sing_hi, 1.0}));
}

/// Lower incomplete beta integral B_x(a, b), a > 0, 0 <= x <= 1.
/// Monotone nondecreasing in x. Reports a divergence error for b <= 0 at
/// x = 1 instead of returning a large number.
inline double inc_beta(double a, double b, double x) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x))
    throw std::domain_error("inc_beta: non-finite argument");
  if (a <= 0.0) throw std::domain_error("inc_beta: requires a > 0");
  if (x < 0.0 || x > 1.0) throw std::domain_error("inc_beta: requires 0 <= x <= 1");
  if (b <= 0.0 && x >= 1.0)
    throw std::domain_error("inc_beta: divergent at x = 1 for b <= 0");
  if (x == 0.0) return 0.0;
  return inc_beta_interval(a, b, 0.0, x);
}

/// Solves inc_beta(a, b, x) = target for x inside [lo, hi] by bisection.
/// The integral is strictly increasing, so bracketing convergence is
/// guaranteed whenever the target lies in the image of the bracket.
inline double inc_beta_inverse(double target, double a, double b, double lo = 0.0,
                               double hi = 1.0) {
  if (!std::isfinite(target)) throw std::domain_error("inc_beta_inverse: non-finite target");
  if (!(0.0 <= lo && lo < hi && hi <= 1.0))
    throw std::domain_error("inc_beta_inverse: bracket must satisfy 0 <= lo < hi <= 1");
  const double f_lo = inc_beta(a, b, lo);
  const double f_hi = inc_beta(a, b, hi);
  const double slack = 1e-11 * std::max(1.0, std::fabs(target));
  if (target < f_lo - slack || target > f_hi + slack)
    throw std::invalid_argument("inc_beta_inverse: target outside the image of the bracket");
  if (target <= f_lo) return lo;
  if (target >= f_hi) return hi;

  double x_lo = lo, x_hi = hi;
  for (int iter = 0; iter < 120 && x_hi - x_lo > 1e-17 * std::max(1.0, x_hi); ++iter) {
    const double mid = 0.5 * (x_lo + x_hi);
    if (inc_beta(a, b, mid) < target)
      x_lo = mid;
    else
      x_hi = mid;
  }
  return 0.5 * (x_lo + x_hi);
}

}  // namespace qgrowth

#endif  // QGROWTH_BETA_HPP
