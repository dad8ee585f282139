// SPDX-License-Identifier: Apache-2.0
//
// Trajectory generation for the unified growth law: closed-form dispatch,
// implicit incomplete-beta propagation where the formal solution applies,
// and adaptive numeric integration everywhere else.

#ifndef QGROWTH_DYNAMICS_HPP
#define QGROWTH_DYNAMICS_HPP

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgrowth/beta.hpp"
#include "qgrowth/models.hpp"
#include "qgrowth/rk45.hpp"

namespace qgrowth {

/// Sampled trajectory in normalized population units. Times are strictly
/// increasing; values are positive and finite unless the point flag says
/// otherwise (clamped = pinned at a support boundary, diverged = blow-up).
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<PointFlag> flags;

  void push(double t, double v, PointFlag f) {
    times.push_back(t);
    values.push_back(v);
    flags.push_back(f);
  }
  [[nodiscard]] std::size_t size() const noexcept { return times.size(); }
};

enum class SolveMethod { analytic, beta, ode };

constexpr std::string_view to_string(SolveMethod m) noexcept {
  switch (m) {
    case SolveMethod::analytic: return "analytic";
    case SolveMethod::beta: return "beta";
    case SolveMethod::ode: return "ode";
  }
  return "?";
}

struct Solution {
  Trajectory trajectory;
  SolveMethod method = SolveMethod::ode;
};

namespace detail {

inline void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("time grid is empty");
  if (!(grid.front() >= 0.0))
    throw std::invalid_argument("time grid must start at t >= 0");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("time grid must be strictly increasing");
}

inline bool near(double u, double v) noexcept { return std::fabs(u - v) <= 1e-12; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Adaptive integration of dp/dt = kappa p^{1-q'} (-ln_q p)^gamma - epsilon p
// ---------------------------------------------------------------------------

inline Trajectory integrate(const GrowthParams& P, std::span<const double> t_grid,
                            const IntegratorConfig& cfg = {}) {
  P.validate();
  cfg.validate();
  detail::validate_grid(t_grid);

  Trajectory out;
  std::size_t gi = 0;
  while (gi < t_grid.size() && t_grid[gi] == 0.0) {
    out.push(0.0, P.p0, PointFlag::ok);
    ++gi;
  }
  if (gi == t_grid.size()) return out;

  // For gamma < 1 the saturation term has a branch endpoint at p = 1 and the
  // true solution arrives there in finite time; steps are rejected rather
  // than taken across, and the state is pinned just below 1 once within
  // 10 * abs_tol of it.
  const bool pin_eligible =
      P.effort == 0.0 && P.kappa > 0.0 && P.gamma < 1.0 && P.gamma != 0.0 && P.p0 < 1.0;

  // Logistic branch with repulsive carrying capacity blows up at a known
  // time; stop just short of it instead of burning steps.
  std::optional<double> t_halt;
  if (P.effort == 0.0 && detail::near(P.gamma, 1.0) && detail::near(P.q, 1.0) &&
      detail::near(P.q_prime, 0.0) && P.kappa < 0.0 && P.p0 > 1.0)
    t_halt = 0.999 * divergence_time(P.kappa, P.p0);

  const double t_stop = t_halt ? std::min(*t_halt, t_grid.back()) : t_grid.back();

  const auto rhs = [&P](double, double y) -> std::optional<double> {
    if (!std::isfinite(y) || !(y > 0.0)) return std::nullopt;
    try {
      return rhs_dp_dt(P, y);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };

  Dopri5Integrator<decltype(rhs)> stepper(rhs, 0.0, P.p0, t_stop, cfg);
  using Status = typename Dopri5Integrator<decltype(rhs)>::Status;

  enum class Halt { none, pinned, diverged };
  Halt halt = Halt::none;
  double pin_value = 1.0 - 10.0 * cfg.abs_tol;
  bool stepped_once = false;

  while (gi < t_grid.size()) {
    const double target = t_grid[gi];
    const double fuzz = 1e-12 * std::max(1.0, std::fabs(stepper.t()));
    if (stepped_once && target <= stepper.t() + fuzz) {
      out.push(target, stepper.last_step().eval(std::min(target, stepper.t())),
               PointFlag::ok);
      ++gi;
      continue;
    }
    if (halt == Halt::pinned) {
      out.push(target, pin_value, PointFlag::clamped);
      ++gi;
      continue;
    }
    if (halt == Halt::diverged) {
      out.push(target, std::numeric_limits<double>::infinity(), PointFlag::diverged);
      ++gi;
      continue;
    }
    if (t_halt && stepper.t() >= *t_halt - fuzz) {
      halt = Halt::diverged;
      continue;
    }

    const Status status = stepper.step_once();
    if (status == Status::stepped || status == Status::finished) {
      stepped_once = true;
      const double y = stepper.y();
      if (!std::isfinite(y) || y > 1e12) {
        halt = Halt::diverged;
      } else if (pin_eligible && y < 1.0 && 1.0 - y <= 10.0 * cfg.abs_tol) {
        halt = Halt::pinned;
        pin_value = std::max(y, 1.0 - 10.0 * cfg.abs_tol);
      } else if (status == Status::finished && t_halt &&
                 stepper.t() >= *t_halt - fuzz) {
        halt = Halt::diverged;
      }
      continue;
    }
    if (status == Status::domain_stall || status == Status::error_stall) {
      if (pin_eligible && 1.0 - stepper.y() < 1e-6) {
        halt = Halt::pinned;
        pin_value = std::max(stepper.y(), 1.0 - 10.0 * cfg.abs_tol);
        continue;
      }
      std::ostringstream msg;
      msg << "integrate: right-hand side unusable near t = " << stepper.t()
          << ", p = " << stepper.y();
      throw std::runtime_error(msg.str());
    }
    throw std::runtime_error("integrate: step budget exhausted (max_steps)");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Implicit incomplete-beta propagation
// ---------------------------------------------------------------------------

/// True when the formal incomplete-beta solution applies: gamma < 1, no
/// effort term, and the deformations on one of the two admissible branches
/// (q > 0 with q' > 0, or q < 0 with q' < 0).
inline bool beta_admissible(const GrowthParams& P) noexcept {
  const double thr = k_deformation_branch;
  if (P.effort != 0.0) return false;
  if (!(P.gamma < 1.0)) return false;
  if (!(P.p0 <= 1.0)) return false;
  const bool branch_pos = P.q > thr && P.q_prime > thr;
  const bool branch_neg = P.q < -thr && P.q_prime < -thr;
  return branch_pos || branch_neg;
}

/// Propagates the trajectory through the separated form of the growth law:
/// with u = p^{|q|}, the elapsed time satisfies
///     B_u(a, 1-gamma) - B_{u0}(a, 1-gamma) = kappa |q|^{1-gamma} t,
/// where a = q'/q on the positive branch and a = gamma - q'/q on the
/// negative one. Each point is recovered with the bracketing inverse.
inline Trajectory propagate_beta(const GrowthParams& P, std::span<const double> t_grid) {
  P.validate();
  detail::validate_grid(t_grid);
  if (!beta_admissible(P))
    throw std::invalid_argument(
        "propagate_beta: parameters outside the implicit-solution regimes "
        "(requires gamma < 1, epsilon = 0, and q, q' of equal sign)");

  const double q_abs = std::fabs(P.q);
  const double ratio = P.q_prime / P.q;  // positive on both branches
  const double a = (P.q > 0.0) ? ratio : P.gamma - ratio;
  const double b = 1.0 - P.gamma;
  const double u0 = std::pow(P.p0, q_abs);
  const double rate = P.kappa * std::pow(q_abs, 1.0 - P.gamma);

  const bool direct = a > 0.0;  // otherwise B_u diverges at 0; use intervals
  const double base = direct ? inc_beta(a, b, u0) : 0.0;
  const double budget =
      direct ? inc_beta(a, b, 1.0) - base : inc_beta_interval(a, b, u0, 1.0);

  Trajectory out;
  for (const double t : t_grid) {
    if (t == 0.0) {
      out.push(0.0, P.p0, PointFlag::ok);
      continue;
    }
    const double elapsed = rate * t;
    if (elapsed >= budget - 1e-12 * std::max(1.0, budget)) {
      // Carrying capacity reached (the integral to u = 1 is exhausted).
      out.push(t, 1.0, PointFlag::clamped);
      continue;
    }
    double u;
    if (direct) {
      u = inc_beta_inverse(base + elapsed, a, b);
    } else {
      double lo = u0, hi = 1.0;
      for (int iter = 0; iter < 120 && hi - lo > 1e-17; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (inc_beta_interval(a, b, u0, mid) < elapsed ? lo : hi) = mid;
      }
      u = 0.5 * (lo + hi);
    }
    out.push(t, std::pow(u, 1.0 / q_abs), PointFlag::ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Closed-form value of the law at time t when the parameter tuple matches
/// one of the solvable shapes, otherwise nothing.
inline std::optional<Sample> analytic_sample(const GrowthParams& P, double t) {
  using detail::near;
  const bool qp_zero = near(P.q_prime, 0.0);
  if (near(P.gamma, 0.0)) {
    if (P.effort == 0.0)
      return kinetic_solution(Deformation{P.q_prime}, P.kappa, P.p0, t);
    if (qp_zero) return malthus_solution(P.kappa - P.effort, P.p0, t);
    return std::nullopt;
  }
  if (near(P.gamma, 1.0)) {
    if (qp_zero) return schaefer_solution(Deformation{P.q}, P.kappa, P.effort, P.p0, t);
    if (P.effort != 0.0) return std::nullopt;
    if (near(P.q_prime, P.q)) return gvb_solution(Deformation{P.q}, P.kappa, P.p0, t);
    return std::nullopt;
  }
  if (P.effort != 0.0) return std::nullopt;
  if (near(P.q, 0.0) && qp_zero && P.p0 < 1.0)
    return hyper_gompertz_solution(P.gamma, P.kappa, P.p0, t);
  if (!near(P.q, 0.0) && near(P.q_prime, P.q * (P.gamma - 1.0)) && P.p0 < 1.0)
    return turner_solution(Deformation{P.q}, P.gamma, P.kappa, P.p0, t);
  return std::nullopt;
}

/// Dispatches to the closed form when one exists, to the incomplete-beta
/// propagation when the implicit solution applies, and to the adaptive
/// integrator otherwise. One method per trajectory, never mixed.
inline Solution solve_params(const GrowthParams& P, std::span<const double> t_grid,
                             const IntegratorConfig& cfg = {}) {
  P.validate();
  detail::validate_grid(t_grid);
  if (analytic_sample(P, 0.0).has_value()) {
    Trajectory tr;
    for (const double t : t_grid) {
      const Sample s = *analytic_sample(P, t);
      tr.push(t, s.value, s.flag);
    }
    return {std::move(tr), SolveMethod::analytic};
  }
  if (beta_admissible(P)) return {propagate_beta(P, t_grid), SolveMethod::beta};
  return {integrate(P, t_grid, cfg), SolveMethod::ode};
}

inline Solution solve(ModelKind kind, const std::map<std::string, double>& free_params,
                      std::span<const double> t_grid, const IntegratorConfig& cfg = {}) {
  return solve_params(model_table(kind, free_params), t_grid, cfg);
}

}  // namespace qgrowth

#endif  // QGROWTH_DYNAMICS_HPP
