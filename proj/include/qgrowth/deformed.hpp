// SPDX-License-Identifier: Apache-2.0
//
// One-parameter deformed logarithm and exponential.
//
//   qln(q, x)  = (x^q - 1)/q          -> ln(x)  as q -> 0
//   qexp(q, x) = [1 + q x]_+^{1/q}    -> exp(x) as q -> 0,  [a]_+ = max(a, 0)
//
// The two functions are mutual inverses on the support of qexp and obey the
// duality qln(-q, x) = -qln(q, 1/x).

#ifndef QGROWTH_DEFORMED_HPP
#define QGROWTH_DEFORMED_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace qgrowth {

// Below this magnitude the deformation is treated as exactly zero and the
// natural log/exp limit is used. Both qln and qexp branch on the same
// threshold so that they remain exact inverses across it.
inline constexpr double k_deformation_branch = 1e-8;

class Deformation {
 public:
  constexpr Deformation() = default;
  explicit Deformation(double qtilde) : q_(qtilde) {
    if (!std::isfinite(qtilde))
      throw std::domain_error("Deformation: parameter must be finite");
  }

  [[nodiscard]] constexpr double value() const noexcept { return q_; }
  [[nodiscard]] bool near_zero() const noexcept {
    return std::fabs(q_) < k_deformation_branch;
  }

 private:
  double q_ = 0.0;
};

namespace detail {

template <class T>
inline constexpr bool is_real_v = std::is_floating_point_v<T>;

// ln(1 + q*x) evaluated so that neither the tiny-argument nor the
// near-cancellation regime loses precision. For q*x close to -1 the fused
// multiply-add keeps the full deviation of 1 + q*x from zero.
template <class T>
T log1p_scaled(T q, T x) {
  const T qx = q * x;
  if (qx > T(-0.5)) return std::log1p(qx);
  const T support = std::fma(q, x, T(1));
  if (support <= T(0)) return -std::numeric_limits<T>::infinity();
  return std::log(support);
}

}  // namespace detail

/// Deformed logarithm. Domain: x > 0.
template <class T = double>
T qln(Deformation q, T x) {
  static_assert(detail::is_real_v<T>);
  if (!std::isfinite(x) || !(x > T(0)))
    throw std::domain_error("qln: argument must be positive and finite");
  if (q.near_zero()) return std::log(x);
  const T qt = static_cast<T>(q.value());
  return std::expm1(qt * std::log(x)) / qt;
}

/// -qln(q, x), the saturation term of the growth laws. Positive for x < 1.
template <class T = double>
T neg_qln(Deformation q, T x) {
  return -qln(q, x);
}

/// Deformed exponential. Returns 0 past the support boundary when the
/// deformation is positive and +infinity past it when negative (the
/// one-sided limits of [1 + q x]_+^{1/q}).
template <class T = double>
T qexp(Deformation q, T x) {
  static_assert(detail::is_real_v<T>);
  if (!std::isfinite(x)) throw std::domain_error("qexp: argument must be finite");
  if (q.near_zero()) return std::exp(x);
  const T qt = static_cast<T>(q.value());
  const T w = detail::log1p_scaled(qt, x);
  if (w == -std::numeric_limits<T>::infinity())
    return qt > T(0) ? T(0) : std::numeric_limits<T>::infinity();
  return std::exp(w / qt);
}

/// qexp that treats a clamped argument as a modeling failure.
template <class T = double>
T qexp_strict(Deformation q, T x) {
  static_assert(detail::is_real_v<T>);
  if (!std::isfinite(x)) throw std::domain_error("qexp: argument must be finite");
  if (!q.near_zero() && std::fma(static_cast<T>(q.value()), x, T(1)) <= T(0))
    throw std::domain_error("qexp: argument outside the support boundary");
  return qexp(q, x);
}

/// The argument -1/q at which qexp leaves its finite positive regime.
/// For q > 0, qexp(q, x) = 0 for every x at or below the returned value.
/// For q < 0, qexp(q, x) diverges for every x at or above it.
/// For q = 0 the ordinary exponential never clamps and -infinity is returned.
inline double qexp_clamp_boundary(Deformation q) noexcept {
  if (q.near_zero()) return -std::numeric_limits<double>::infinity();
  return -1.0 / q.value();
}

}  // namespace qgrowth

#endif  // QGROWTH_DEFORMED_HPP
