// SPDX-License-Identifier: Apache-2.0
//
// Embedded Dormand-Prince 5(4) pair for scalar ODEs, with the standard
// fourth-order continuous extension for dense output. The right-hand side
// is an invocable returning std::optional<double>; an empty result marks a
// trial point outside the RHS domain and triggers step rejection.

#ifndef QGROWTH_RK45_HPP
#define QGROWTH_RK45_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qgrowth {

struct IntegratorConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 means unconstrained
  long max_steps = 200000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::domain_error("IntegratorConfig: tolerances must be positive");
    if (max_steps <= 0) throw std::domain_error("IntegratorConfig: max_steps must be positive");
    if (max_step < 0.0) throw std::domain_error("IntegratorConfig: max_step must be >= 0");
  }
};

namespace rk45 {

// Butcher tableau of the Dormand-Prince 5(4) pair.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights.
inline constexpr double d1 = -12715105075.0 / 11282082432.0;
inline constexpr double d3 = 87487479700.0 / 32700410799.0;
inline constexpr double d4 = -10690763975.0 / 1880347072.0;
inline constexpr double d5 = 701980252875.0 / 199316789632.0;
inline constexpr double d6 = -1453857185.0 / 822651844.0;
inline constexpr double d7 = 69997945.0 / 29380423.0;

}  // namespace rk45

/// One accepted step and its interpolation polynomial.
struct DenseStep {
  double t0 = 0.0, h = 0.0;
  double y0 = 0.0, y1 = 0.0;
  std::array<double, 5> rcont{};  // y0, ydiff, bspl, c4, c5

  [[nodiscard]] bool contains(double t) const noexcept {
    return t >= t0 - 1e-14 && t <= t0 + h + 1e-14;
  }
  [[nodiscard]] double eval(double t) const noexcept {
    const double theta = (t - t0) / h;
    const double omt = 1.0 - theta;
    return rcont[0] +
           theta * (rcont[1] + omt * (rcont[2] + theta * (rcont[3] + omt * rcont[4])));
  }
};

/// Adaptive driver. RHS signature: std::optional<double>(double t, double y).
template <class RHS>
class Dopri5Integrator {
 public:
  enum class Status { stepped, finished, domain_stall, error_stall, step_limit };

  Dopri5Integrator(RHS rhs, double t0, double y0, double t_end, IntegratorConfig cfg)
      : f_(std::move(rhs)), cfg_(cfg), t_(t0), y_(y0), t_end_(t_end) {
    cfg_.validate();
    if (!(t_end > t0)) throw std::invalid_argument("integrator: requires t_end > t0");
    auto k1 = f_(t_, y_);
    if (!k1)
      throw std::domain_error("integrator: right-hand side invalid at the initial point");
    k1_ = *k1;
    h_ = initial_step();
  }

  [[nodiscard]] double t() const noexcept { return t_; }
  [[nodiscard]] double y() const noexcept { return y_; }
  [[nodiscard]] const DenseStep& last_step() const noexcept { return step_; }
  [[nodiscard]] long steps_taken() const noexcept { return n_steps_; }

  /// Advances by one accepted step (retrying rejected trial steps inside).
  Status step_once() {
    if (t_ >= t_end_) return Status::finished;
    bool rejected_before = false;
    while (true) {
      if (n_steps_ >= cfg_.max_steps) return Status::step_limit;
      const double h_min = 1e-14 * std::max(1.0, std::fabs(t_));
      double h = std::min(h_, t_end_ - t_);
      if (cfg_.max_step > 0.0) h = std::min(h, cfg_.max_step);
      bool last = h >= t_end_ - t_ - h_min;

      double err = 0.0;
      DenseStep trial;
      const bool in_domain = attempt(h, trial, err);
      ++n_steps_;
      if (!in_domain) {
        h_ = h * 0.3;
        if (h_ < h_min) return Status::domain_stall;
        rejected_before = true;
        continue;
      }
      if (err <= 1.0) {
        double fac = 0.9 * std::pow(err > 1e-30 ? err : 1e-30, -0.2);
        fac = std::clamp(fac, 0.2, rejected_before ? 1.0 : 10.0);
        double h_next = h * fac;
        if (cfg_.max_step > 0.0) h_next = std::min(h_next, cfg_.max_step);
        step_ = trial;
        t_ = last ? t_end_ : t_ + h;
        y_ = step_.y1;
        k1_ = k7_;  // FSAL
        h_ = h_next;
        return last && t_ >= t_end_ ? Status::finished : Status::stepped;
      }
      const double fac = std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
      h_ = h * fac;
      if (h_ < h_min) return Status::error_stall;
      rejected_before = true;
    }
  }

 private:
  // Evaluates one trial step of size h. Returns false if any stage left the
  // RHS domain; otherwise fills the trial step, k7_ and the error estimate.
  bool attempt(double h, DenseStep& out, double& err_norm) {
    using namespace rk45;
    const double t = t_, y = y_, k1 = k1_;
    auto st = [&](double tt, double yy) { return f_(tt, yy); };

    const auto s2 = st(t + c2 * h, y + h * a21 * k1);
    if (!s2) return false;
    const double k2 = *s2;
    const auto s3 = st(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    if (!s3) return false;
    const double k3 = *s3;
    const auto s4 = st(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    if (!s4) return false;
    const double k4 = *s4;
    const auto s5 = st(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    if (!s5) return false;
    const double k5 = *s5;
    const double y6 = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    const auto s6 = st(t + h, y6);
    if (!s6) return false;
    const double k6 = *s6;
    const double y1 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const auto s7 = st(t + h, y1);
    if (!s7) return false;
    const double k7 = *s7;
    if (!std::isfinite(y1)) return false;

    const double err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double scale =
        cfg_.abs_tol + cfg_.rel_tol * std::max(std::fabs(y), std::fabs(y1));
    err_norm = std::fabs(err / scale);

    const double ydiff = y1 - y;
    const double bspl = h * k1 - ydiff;
    out.t0 = t;
    out.h = h;
    out.y0 = y;
    out.y1 = y1;
    out.rcont[0] = y;
    out.rcont[1] = ydiff;
    out.rcont[2] = bspl;
    out.rcont[3] = ydiff - h * k7 - bspl;
    out.rcont[4] = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
    k7_ = k7;
    return true;
  }

  double initial_step() const {
    const double span = t_end_ - t_;
    const double sc = cfg_.abs_tol + cfg_.rel_tol * std::fabs(y_);
    double h = 1e-2 * span;
    if (std::fabs(k1_) > 1e-300) h = std::min(h, 0.01 * sc / std::fabs(k1_) * 100.0);
    // Probe with an Euler step to bound the second derivative.
    const auto probe = f_(t_ + h * 0.01, y_ + h * 0.01 * k1_);
    if (probe) {
      const double der2 = std::fabs(*probe - k1_) / (h * 0.01);
      if (der2 > 1e-300) h = std::min(h, std::pow(0.01 / der2, 0.5));
    }
    if (cfg_.max_step > 0.0) h = std::min(h, cfg_.max_step);
    return std::clamp(h, 1e-12 * std::max(1.0, span), span);
  }

  RHS f_;
  IntegratorConfig cfg_;
  double t_, y_, t_end_;
  double k1_ = 0.0, k7_ = 0.0, h_ = 0.0;
  DenseStep step_{};
  long n_steps_ = 0;
};

}  // namespace qgrowth

#endif  // QGROWTH_RK45_HPP
