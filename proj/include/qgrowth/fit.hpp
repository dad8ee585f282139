// SPDX-License-Identifier: Apache-2.0
//
// Nonlinear least-squares estimation of free model parameters from observed
// (t, n) or (t, p) series, using the trajectory solver as forward model and
// a derivative-free simplex search (no gradients exist through the
// beta-implicit path, and the forward model may be non-smooth at flags).

#ifndef QGROWTH_FIT_HPP
#define QGROWTH_FIT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgrowth/dynamics.hpp"
#include "qgrowth/models.hpp"

namespace qgrowth {

enum class LossSpace { linear, log };

constexpr std::string_view to_string(LossSpace s) noexcept {
  return s == LossSpace::linear ? "linear" : "log";
}

/// Observed series. `normalized` means values are already p = n / n_inf;
/// otherwise they are raw counts and a carrying capacity is needed to
/// normalize (either stored here or supplied as a fit target).
struct ObservationSeries {
  std::vector<double> times;
  std::vector<double> values;
  bool normalized = true;
  std::optional<double> carrying_capacity;

  void validate() const {
    if (times.size() != values.size())
      throw std::invalid_argument("ObservationSeries: times/values length mismatch");
    if (times.size() < 3)
      throw std::invalid_argument("ObservationSeries: needs at least 3 observations");
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (!std::isfinite(times[i]) || !std::isfinite(values[i]) || !(values[i] > 0.0))
        throw std::invalid_argument("ObservationSeries: values must be positive and finite");
      if (i > 0 && !(times[i] > times[i - 1]))
        throw std::invalid_argument("ObservationSeries: times must be strictly increasing");
    }
    if (!(times.front() >= 0.0))
      throw std::invalid_argument("ObservationSeries: times must start at t >= 0");
    if (carrying_capacity && !(*carrying_capacity > 0.0))
      throw std::invalid_argument("ObservationSeries: carrying capacity must be positive");
  }
};

struct FitResult {
  GrowthParams params{};                     // bound at the best point
  std::map<std::string, double> free_values; // estimated free parameters
  double sse = 0.0;
  int n_evals = 0;
  bool converged = false;
  LossSpace loss_space = LossSpace::log;
};

struct FitConfig {
  std::map<std::string, double> values;  // initial values for free names, fixed for the rest
  std::map<std::string, std::pair<double, double>> bounds;
  LossSpace loss = LossSpace::log;
  int max_evals = 10000;
  double simplex_tol = 1e-9;  // relative simplex diameter at convergence
  IntegratorConfig forward{};
};

/// Observed-minus-model residual vector in the chosen space.
inline std::vector<double> residuals(const ObservationSeries& series,
                                     const GrowthParams& params, LossSpace loss,
                                     const IntegratorConfig& cfg = {}) {
  series.validate();
  std::vector<double> p_obs(series.values);
  if (!series.normalized) {
    if (!series.carrying_capacity)
      throw std::invalid_argument("residuals: raw counts require a carrying capacity");
    for (double& v : p_obs) v /= *series.carrying_capacity;
  }
  const Solution sol = solve_params(params, series.times, cfg);
  std::vector<double> out(p_obs.size());
  for (std::size_t i = 0; i < p_obs.size(); ++i) {
    const double model = sol.trajectory.values[i];
    out[i] = (loss == LossSpace::linear) ? p_obs[i] - model
                                         : std::log(p_obs[i]) - std::log(model);
  }
  return out;
}

namespace detail {

inline double sum_squares(const std::vector<double>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::isfinite(s) ? s : std::numeric_limits<double>::infinity();
}

// Plain Nelder-Mead on [0,inf)-unconstrained coordinates; box bounds are
// enforced with an infinite-loss penalty in the objective.
struct SimplexOutcome {
  std::vector<double> best;
  double f_best = 0.0;
  int n_evals = 0;
  bool converged = false;
};

inline SimplexOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                  std::vector<double> x0, int max_evals, double tol) {
  const std::size_t n = x0.size();
  int evals = 0;
  const auto eval = [&](const std::vector<double>& x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    xs[i + 1][i] = (x0[i] != 0.0) ? x0[i] * 1.05 : 0.00025;
  for (std::size_t i = 0; i <= n; ++i) fs[i] = eval(xs[i]);

  const auto order = [&] {
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    std::vector<std::vector<double>> xs2(n + 1);
    std::vector<double> fs2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      xs2[i] = xs[idx[i]];
      fs2[i] = fs[idx[i]];
    }
    xs.swap(xs2);
    fs.swap(fs2);
  };

  bool converged = false;
  while (evals < max_evals) {
    order();
    double diameter = 0.0, scale = 1.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        diameter = std::max(diameter, std::fabs(xs[i][j] - xs[0][j]));
        scale = std::max(scale, std::fabs(xs[0][j]));
      }
    if (diameter <= tol * scale) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += xs[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j)
        x[j] = centroid[j] + coef * (xs[n][j] - centroid[j]);
      return x;
    };

    const auto xr = blend(-1.0);  // reflection
    const double fr = eval(xr);
    if (fr < fs[0]) {
      const auto xe = blend(-2.0);  // expansion
      const double fe = eval(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
      continue;
    }
    if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
      continue;
    }
    const bool outside = fr < fs[n];
    const auto xc = blend(outside ? -0.5 : 0.5);  // contraction
    const double fc = eval(xc);
    if (fc < std::min(fr, fs[n])) {
      xs[n] = xc;
      fs[n] = fc;
      continue;
    }
    // shrink toward the best vertex
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) xs[i][j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
      fs[i] = eval(xs[i]);
      if (evals >= max_evals) break;
    }
  }
  order();
  return {xs[0], fs[0], evals, converged};
}

}  // namespace detail

/// Estimates the named free parameters of a model row by simplex
/// minimization of the residual sum of squares. Forward-model domain errors
/// at a candidate point count as infinite loss. Setups with fewer
/// observations than free parameters + 1 are rejected as unidentifiable.
inline FitResult fit(const ObservationSeries& series, ModelKind kind,
                     const std::vector<std::string>& free_names, const FitConfig& cfg) {
  series.validate();
  if (free_names.empty()) throw std::invalid_argument("fit: no free parameters");
  if (series.times.size() < free_names.size() + 1)
    throw std::invalid_argument("fit: unidentifiable (needs more observations than free parameters)");
  for (const auto& name : free_names) {
    if (!cfg.values.contains(name))
      throw std::invalid_argument("fit: missing initial value for free parameter '" + name + "'");
    if (std::count(free_names.begin(), free_names.end(), name) != 1)
      throw std::invalid_argument("fit: duplicate free parameter '" + name + "'");
  }
  const bool fits_ninf = std::count(free_names.begin(), free_names.end(), "n_inf") > 0;
  if (fits_ninf && series.normalized)
    throw std::invalid_argument("fit: n_inf can only be fitted against raw counts");
  if (!series.normalized && !series.carrying_capacity && !cfg.values.contains("n_inf"))
    throw std::invalid_argument("fit: raw counts require n_inf (fixed or free)");

  // Candidate -> bound parameters + observation series in p units.
  const auto bind = [&](const std::vector<double>& x)
      -> std::pair<GrowthParams, ObservationSeries> {
    std::map<std::string, double> values = cfg.values;
    for (std::size_t i = 0; i < free_names.size(); ++i) values[free_names[i]] = x[i];
    ObservationSeries obs = series;
    if (auto it = values.find("n_inf"); it != values.end()) {
      obs.carrying_capacity = it->second;
      values.erase(it);
    }
    if (!obs.normalized && !obs.carrying_capacity)
      throw std::invalid_argument("fit: raw counts require n_inf (fixed or free)");
    return {model_table(kind, values), obs};
  };

  const auto objective = [&](const std::vector<double>& x) -> double {
    for (std::size_t i = 0; i < free_names.size(); ++i) {
      const auto it = cfg.bounds.find(free_names[i]);
      if (it != cfg.bounds.end() && (x[i] < it->second.first || x[i] > it->second.second))
        return std::numeric_limits<double>::infinity();
    }
    try {
      auto [params, obs] = bind(x);
      if (auto cc = obs.carrying_capacity; cc && !(*cc > 0.0))
        return std::numeric_limits<double>::infinity();
      return detail::sum_squares(residuals(obs, params, cfg.loss, cfg.forward));
    } catch (const std::exception&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> x0(free_names.size());
  for (std::size_t i = 0; i < free_names.size(); ++i) x0[i] = cfg.values.at(free_names[i]);

  auto run = detail::nelder_mead(objective, x0, cfg.max_evals, cfg.simplex_tol);
  // One restart from the found point tightens the simplex when budget remains.
  if (run.converged && run.n_evals < cfg.max_evals) {
    auto second =
        detail::nelder_mead(objective, run.best, cfg.max_evals - run.n_evals, cfg.simplex_tol);
    second.n_evals += run.n_evals;
    if (second.f_best <= run.f_best) run = second;
  }

  // Never report a point worse than the starting one.
  const double f_init = objective(x0);
  if (f_init < run.f_best) {
    run.best = x0;
    run.f_best = f_init;
  }

  FitResult result;
  auto [params, obs] = bind(run.best);
  result.params = params;
  for (std::size_t i = 0; i < free_names.size(); ++i)
    result.free_values[free_names[i]] = run.best[i];
  result.sse = run.f_best;
  result.n_evals = run.n_evals;
  result.converged = run.converged;
  result.loss_space = cfg.loss;
  return result;
}

}  // namespace qgrowth

#endif  // QGROWTH_FIT_HPP
