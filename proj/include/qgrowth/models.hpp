// SPDX-License-Identifier: Apache-2.0
//
// The unified one-species growth law
//
//     d ln_{q'} p / dt = kappa (-ln_q p)^gamma - epsilon,
//     p = n / n_inf,
//
// its catalogue of named specializations (Malthus through the generic
// four-parameter law), their closed-form solutions where they exist, the
// parameter maps between the published formulations, and the microscopic
// interpretation of the deformation parameter.

#ifndef QGROWTH_MODELS_HPP
#define QGROWTH_MODELS_HPP

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgrowth/deformed.hpp"

namespace qgrowth {

enum class PointFlag { ok, clamped, diverged };

constexpr std::string_view to_string(PointFlag f) noexcept {
  switch (f) {
    case PointFlag::ok: return "ok";
    case PointFlag::clamped: return "clamped";
    case PointFlag::diverged: return "diverged";
  }
  return "?";
}

/// A single evaluated trajectory point. `clamped` marks a value pinned at a
/// support boundary (extinction at 0 or carrying capacity at 1), `diverged`
/// a finite-time blow-up.
struct Sample {
  double value = 0.0;
  PointFlag flag = PointFlag::ok;
};

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// Bound parameter tuple of the unified law. kappa and effort carry units of
/// inverse time; the rest are dimensionless. p0 is the initial normalized
/// population.
struct GrowthParams {
  double q_prime = 0.0;  // deformation of the left-hand-side logarithm
  double q = 0.0;        // deformation inside the saturation term
  double gamma = 1.0;    // saturation exponent
  double kappa = 0.0;    // rate constant
  double effort = 0.0;   // insertion/removal rate
  double p0 = 0.0;

  void validate() const {
    for (double v : {q_prime, q, gamma, kappa, effort, p0})
      if (!std::isfinite(v)) throw std::domain_error("GrowthParams: non-finite field");
    if (!(p0 > 0.0)) throw std::domain_error("GrowthParams: requires p0 > 0");
    // (-ln_q p)^gamma is complex for p > 1 unless gamma is an integer.
    if (gamma != std::floor(gamma)) {
      if (p0 > 1.0)
        throw std::domain_error(
            "GrowthParams: p0 > 1 makes (-ln_q p)^gamma complex for non-integer gamma");
      if (gamma < 0.0 && p0 == 1.0)
        throw std::domain_error("GrowthParams: p0 = 1 is singular for gamma < 0");
    }
  }
};

enum class ModelKind {
  Malthus,
  Verhulst,
  Gompertz,
  HyperGompertz,
  Richards,
  RichardsSchaefer,
  Mitscherlich,
  Blumberg,
  Turner,
  SpecializedVonBertalanffy,
  GeneralizedVonBertalanffy,
  MarusicBajzer,
  TsoularisWallace,
  ZipfMandelbrotKinetic,
  SmithApprox,
};

struct ModelRow {
  ModelKind kind;
  std::string_view name;      // machine name, used on the command line
  std::string_view label;     // display name
  std::string_view qprime_s;  // fixed value or formula; "*" means free
  std::string_view q_s;
  std::string_view gamma_s;
  std::string_view kappa_s;
  std::string_view equation;
  bool in_summary_table;  // member of the 13-row model summary
};

inline const std::array<ModelRow, 15>& model_rows() {
  static const std::array<ModelRow, 15> rows = {{
      {ModelKind::Malthus, "Malthus", "Malthus (exponential)", "0", "*", "0", "r",
       "d ln p/dt = r", true},
      {ModelKind::Verhulst, "Verhulst", "Verhulst (logistic)", "0", "1", "1", "r",
       "d ln p/dt = r (1-p)", true},
      {ModelKind::Gompertz, "Gompertz", "Gompertz", "0", "0", "1", "*",
       "d ln p/dt = -kappa ln p", true},
      {ModelKind::HyperGompertz, "HyperGompertz", "hyper-Gompertz", "0", "0", "*", "*",
       "d ln p/dt = kappa (-ln p)^gamma", true},
      {ModelKind::Richards, "Richards", "Richards", "0", "*", "1", "r q",
       "d ln p/dt = r (1-p^q)", true},
      {ModelKind::TsoularisWallace, "TsoularisWallace", "Tsoularis and Wallace", "*", "*",
       "*", "*", "d ln_q' p/dt = kappa (-ln_q p)^gamma", true},
      {ModelKind::MarusicBajzer, "MarusicBajzer", "Marusic and Bajzer", "*", "*", "1", "*",
       "d ln_q' p/dt = -kappa ln_q p", true},
      {ModelKind::Mitscherlich, "Mitscherlich", "Mitscherlich (monomolecular)", "1", "1",
       "1", "*", "dp/dt = kappa (1-p)", true},
      {ModelKind::Blumberg, "Blumberg", "Blumberg", "*", "1", "*", "*",
       "d ln_q' p/dt = kappa (1-p)^gamma", true},
      {ModelKind::Turner, "Turner", "Turner et al.", "q (gamma-1)", "*", "*", "*",
       "d ln p/dt = kappa p^{q (1-gamma)} (-ln_q p)^gamma", true},
      {ModelKind::SpecializedVonBertalanffy, "SpecializedVonBertalanffy",
       "Specialized von Bertalanffy", "1/3", "1/3", "1", "*",
       "d ln_{1/3} p/dt = -kappa ln_{1/3} p", true},
      {ModelKind::GeneralizedVonBertalanffy, "GeneralizedVonBertalanffy",
       "Generalized von Bertalanffy", "q", "*", "1", "*",
       "d ln_q p/dt = -kappa ln_q p", true},
      {ModelKind::SmithApprox, "SmithApprox", "Smith", "0.527", "1", "1", "*",
       "approximation", true},
      {ModelKind::RichardsSchaefer, "RichardsSchaefer", "Richards-Schaefer", "0", "*", "1",
       "*", "d ln p/dt = -kappa ln_q p - epsilon", false},
      {ModelKind::ZipfMandelbrotKinetic, "ZipfMandelbrotKinetic", "Zipf-Mandelbrot kinetic",
       "q", "*", "0", "*", "dy/dx = kappa y^{1-q}", false},
  }};
  return rows;
}

inline const ModelRow& model_row(ModelKind kind) {
  for (const auto& row : model_rows())
    if (row.kind == kind) return row;
  throw std::invalid_argument("unknown model kind");
}

inline ModelKind parse_model_kind(std::string_view name) {
  for (const auto& row : model_rows())
    if (row.name == name) return row.kind;
  throw std::invalid_argument("unknown model: " + std::string(name));
}

// ---------------------------------------------------------------------------
// The unified right-hand side
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_integer(double v) noexcept { return v == std::floor(v); }

// (-ln_q p)^gamma with the domain checks shared by both rate forms.
inline double saturation_power(const GrowthParams& P, double p) {
  if (P.gamma == 0.0) return 1.0;
  const double base = neg_qln(Deformation{P.q}, p);
  if (P.gamma == 1.0) return base;
  if (base < 0.0 && !is_integer(P.gamma))
    throw std::domain_error("growth rate: (-ln_q p)^gamma has negative base at p > 1");
  if (base == 0.0 && P.gamma < 0.0)
    throw std::domain_error("growth rate: (-ln_q p)^gamma singular at p = 1 for gamma < 0");
  return std::pow(base, P.gamma);
}

}  // namespace detail

/// Relative growth rate d ln p/dt = kappa p^{-q'} (-ln_q p)^gamma - epsilon.
inline double saturation_rate(const GrowthParams& P, double p) {
  if (!std::isfinite(p) || !(p > 0.0))
    throw std::domain_error("saturation_rate: requires p > 0");
  return P.kappa * std::pow(p, -P.q_prime) * detail::saturation_power(P, p) - P.effort;
}

/// dp/dt = kappa p^{1-q'} (-ln_q p)^gamma - epsilon p  (= p * saturation_rate).
inline double rhs_dp_dt(const GrowthParams& P, double p) {
  if (!std::isfinite(p) || !(p > 0.0))
    throw std::domain_error("rhs_dp_dt: requires p > 0");
  return P.kappa * std::pow(p, 1.0 - P.q_prime) * detail::saturation_power(P, p) -
         P.effort * p;
}

// ---------------------------------------------------------------------------
// Closed-form solutions
// ---------------------------------------------------------------------------

namespace detail {

// Flag assignment for a value produced by the deformed exponential: exact
// zero means the support clamped (extinction), +infinity a finite blow-up.
inline Sample flag_qexp_value(double v) noexcept {
  if (v == 0.0) return {0.0, PointFlag::clamped};
  if (!std::isfinite(v)) return {v, PointFlag::diverged};
  return {v, PointFlag::ok};
}

// Solution of the pure decay kinetic dw/dt = -kappa w^gamma, w(0) = w0 >= 0.
// This is w0 * qexp(1-gamma, -kappa t w0^{gamma-1}) with the degenerate
// branches resolved: gamma = 0 decays linearly through zero, gamma in (0,1)
// reaches zero in finite time and stays (flagged clamped), gamma >= 1 decays
// only asymptotically.
inline Sample kinetic_decay(double w0, double gamma, double kappa, double t) {
  if (w0 == 0.0) return {0.0, gamma > 0.0 ? PointFlag::ok : PointFlag::clamped};
  if (gamma == 1.0) return {w0 * std::exp(-kappa * t), PointFlag::ok};
  if (gamma == 0.0) return {w0 - kappa * t, PointFlag::ok};
  const double one_minus_gamma = 1.0 - gamma;
  const double v = std::pow(w0, one_minus_gamma) - kappa * one_minus_gamma * t;
  if (gamma < 1.0) {
    if (v <= 0.0) return {0.0, PointFlag::clamped};
    return {std::pow(v, 1.0 / one_minus_gamma), PointFlag::ok};
  }
  // gamma > 1: v = w^{1-gamma} grows for kappa > 0; v <= 0 only on the
  // blow-up branch kappa < 0.
  if (v <= 0.0) return {std::numeric_limits<double>::infinity(), PointFlag::diverged};
  return {std::pow(v, 1.0 / one_minus_gamma), PointFlag::ok};
}

}  // namespace detail

/// Exponential (Malthus) solution p(t) = p0 e^{kappa t}.
inline Sample malthus_solution(double kappa, double p0, double t) {
  if (!(p0 > 0.0)) throw std::domain_error("malthus_solution: requires p0 > 0");
  if (t == 0.0) return {p0, PointFlag::ok};
  return {p0 * std::exp(kappa * t), PointFlag::ok};
}

/// Monomolecular solution p(t) = 1 - (1 - p0) e^{-kappa t}.
inline Sample mitscherlich_solution(double kappa, double p0, double t) {
  if (!(p0 > 0.0)) throw std::domain_error("mitscherlich_solution: requires p0 > 0");
  if (t == 0.0) return {p0, PointFlag::ok};
  const double v = 1.0 - (1.0 - p0) * std::exp(-kappa * t);
  if (v <= 0.0) return {0.0, PointFlag::clamped};
  return {v, PointFlag::ok};
}

/// Solution of d ln p/dt = -kappa ln_q p:
///     p(t) = qexp(-q, qln(-q, p0) e^{-kappa t})
/// Interpolates the logistic (q = 1) and Gompertz (q -> 0) curves.
inline Sample richards_solution(Deformation q, double kappa, double p0, double t) {
  if (!(p0 > 0.0)) throw std::domain_error("richards_solution: requires p0 > 0");
  if (t == 0.0) return {p0, PointFlag::ok};
  const Deformation dual{-q.value()};
  return detail::flag_qexp_value(qexp(dual, qln(dual, p0) * std::exp(-kappa * t)));
}

/// Solution of the effort-rate (Schaefer) variant: the Richards curve of
/// p / qexp(q, effort) with rate kappa - q*effort, so the asymptote moves
/// from 1 to qexp(q, effort).
inline Sample schaefer_solution(Deformation q, double kappa, double effort, double p0,
                                double t) {
  if (!(p0 > 0.0)) throw std::domain_error("schaefer_solution: requires p0 > 0");
  if (effort == 0.0) return richards_solution(q, kappa, p0, t);
  const double cap = qexp(q, effort);
  if (cap <= 0.0 || !std::isfinite(cap))
    throw std::domain_error("schaefer_solution: qexp(q, effort) outside its support");
  if (t == 0.0) return {p0, PointFlag::ok};
  const double rate = kappa - q.value() * effort;
  const Deformation dual{-q.value()};
  const double inner = -qln(q, cap / p0) * std::exp(-rate * t);
  Sample s = detail::flag_qexp_value(qexp(dual, inner));
  s.value *= cap;
  return s;
}

/// Blow-up time of the logistic branch with repulsive carrying capacity
/// (kappa < 0, p0 > 1): t* = ln(1 - 1/p0) / kappa.
inline double divergence_time(double kappa, double p0) {
  if (!(kappa < 0.0) || !(p0 > 1.0))
    throw std::domain_error("divergence_time: requires kappa < 0 and p0 > 1");
  return std::log(1.0 - 1.0 / p0) / kappa;
}

/// Solution of d ln_q p/dt = -kappa ln_q p (generalized von Bertalanffy):
///     p(t) = qexp(q, qln(q, p0) e^{-kappa t})
inline Sample gvb_solution(Deformation q, double kappa, double p0, double t) {
  if (!(p0 > 0.0)) throw std::domain_error("gvb_solution: requires p0 > 0");
  if (t == 0.0) return {p0, PointFlag::ok};
  return detail::flag_qexp_value(qexp(q, qln(q, p0) * std::exp(-kappa * t)));
}

/// Solution of d ln p/dt = kappa (-ln p)^gamma for p0 in (0,1): a deformed
/// exponential nested inside the ordinary one,
///     p(t) = exp(ln(p0) * qexp(1-gamma, -kappa t (-ln p0)^{gamma-1})).
inline Sample hyper_gompertz_solution(double gamma, double kappa, double p0, double t) {
  if (!(p0 > 0.0) || !(p0 < 1.0))
    throw std::domain_error("hyper_gompertz_solution: requires 0 < p0 < 1");
  if (gamma == 1.0) return richards_solution(Deformation{0.0}, kappa, p0, t);
  if (t == 0.0) return {p0, PointFlag::ok};
  const Sample w = detail::kinetic_decay(-std::log(p0), gamma, kappa, t);
  if (w.flag == PointFlag::diverged) return {0.0, PointFlag::clamped};  // p = e^{-inf}
  return {std::exp(-w.value), w.flag};
}

/// Solution of d ln p/dt = kappa p^{q(1-gamma)} (-ln_q p)^gamma:
///     p(t) = qexp(-q, qln(-q, p0) * qexp(1-gamma, -kappa t (ln_q(1/p0))^{gamma-1}))
inline Sample turner_solution(Deformation q, double gamma, double kappa, double p0,
                              double t) {
  if (!(p0 > 0.0) || !(p0 < 1.0))
    throw std::domain_error("turner_solution: requires 0 < p0 < 1");
  if (gamma == 1.0) return richards_solution(q, kappa, p0, t);
  if (q.near_zero()) return hyper_gompertz_solution(gamma, kappa, p0, t);
  if (t == 0.0) return {p0, PointFlag::ok};
  const double w0 = qln(q, 1.0 / p0);
  const Sample w = detail::kinetic_decay(w0, gamma, kappa, t);
  if (w.flag == PointFlag::diverged) {
    // w -> +inf drives p toward the lower support edge.
    return {0.0, PointFlag::clamped};
  }
  const Sample p = detail::flag_qexp_value(qexp(Deformation{-q.value()}, -w.value));
  return {p.value, w.flag == PointFlag::ok ? p.flag : w.flag};
}

/// Solution of the kinetic equation dy/dx = k y^{1-q}, y(0) = y0:
///     y(x) = y0 * qexp(q, k x y0^{-q})
/// Houses the Zipf-Mandelbrot power law (k < 0, q > 0 gives the decaying
/// branch; q = 0 the ordinary exponential).
inline Sample kinetic_solution(Deformation q, double k, double y0, double x) {
  if (!(y0 > 0.0)) throw std::domain_error("kinetic_solution: requires y0 > 0");
  if (x == 0.0) return {y0, PointFlag::ok};
  Sample s = detail::flag_qexp_value(qexp(q, k * x * std::pow(y0, -q.value())));
  s.value *= y0;
  return s;
}

// ---------------------------------------------------------------------------
// Parameter maps
// ---------------------------------------------------------------------------

/// Maps the two-term power equation dy/dx = a y^alpha + b y^beta onto the
/// unified tuple: q' = alpha - 1, q = alpha - beta, gamma = 1 and
/// kappa = -a q [(-b)/a]^{q'/q}, with p = y scaled by the carrying capacity
/// [(-b)/a]^{-1/q}. The degenerate case alpha = beta collapses to the
/// one-term kinetic equation dy/dx = (a+b) y^alpha.
inline GrowthParams marusic_map(double a, double b, double alpha, double beta, double p0) {
  for (double v : {a, b, alpha, beta, p0})
    if (!std::isfinite(v)) throw std::domain_error("marusic_map: non-finite argument");
  if (a == 0.0) throw std::domain_error("marusic_map: requires a != 0");

  GrowthParams P;
  P.p0 = p0;
  const double q = alpha - beta;
  if (std::fabs(q) < k_deformation_branch) {
    // One-term equation: gamma = 0 with kinetic order exponent alpha.
    P.q_prime = 1.0 - alpha;
    P.q = 0.0;
    P.gamma = 0.0;
    P.kappa = a + b;
    P.validate();
    return P;
  }
  P.q_prime = alpha - 1.0;
  P.q = q;
  P.gamma = 1.0;
  const double ratio = -b / a;  // (m-k)/m in the two-term form
  const double expo = P.q_prime / q;
  if (ratio <= 0.0 && !detail::is_integer(expo))
    throw std::domain_error(
        "marusic_map: (-b)/a must be positive for a non-integer exponent q'/q");
  P.kappa = -a * q * std::pow(ratio, expo);
  P.validate();
  return P;
}

/// Microscopic interpretation of the deformation: a population of cells with
/// fractal dimension d_f whose inhibitory interaction decays with distance
/// as r^{-gamma_int} follows the Richards law with q = 1 - gamma_int / d_f.
struct MicroscopicParams {
  double gamma_int = 0.0;  // interaction-decay exponent, >= 0
  double d_f = 1.0;        // fractal dimension, > 0
  double mean_g = 0.0;     // intrinsic replication rate
  double j_coupling = 0.0;
  double omega = 1.0;      // geometry constant, > 0
};

enum class MicroRegime { verhulst, richards, gompertz, exponential_tail, mitscherlich };

constexpr std::string_view to_string(MicroRegime r) noexcept {
  switch (r) {
    case MicroRegime::verhulst: return "Verhulst";
    case MicroRegime::richards: return "Richards";
    case MicroRegime::gompertz: return "Gompertz";
    case MicroRegime::exponential_tail: return "exponential-tail";
    case MicroRegime::mitscherlich: return "Mitscherlich";
  }
  return "?";
}

inline std::pair<Deformation, MicroRegime> microscopic_qtilde(const MicroscopicParams& mp) {
  if (!(mp.d_f > 0.0)) throw std::domain_error("microscopic_qtilde: requires d_f > 0");
  if (mp.gamma_int < 0.0)
    throw std::domain_error("microscopic_qtilde: requires gamma_int >= 0");
  const double qt = 1.0 - mp.gamma_int / mp.d_f;
  const Deformation q{qt};
  if (mp.gamma_int == 0.0) return {q, MicroRegime::verhulst};  // mean-field limit
  if (std::fabs(qt - 1.0) < 1e-12) return {q, MicroRegime::verhulst};
  if (std::fabs(qt) < 1e-12) return {q, MicroRegime::gompertz};
  if (std::fabs(qt + 1.0) < 1e-12) return {q, MicroRegime::mitscherlich};
  if (qt < 0.0) return {q, MicroRegime::exponential_tail};
  return {q, MicroRegime::richards};
}

/// Exact Smith rate d ln p/dt = r (1-p) / (1 + r a p). The summary-table row
/// SmithApprox is the catalogued reduction with q' = 1 - 0.473; this exact
/// form is kept separately for numeric integration.
inline double smith_exact_rate(double r, double a, double p) {
  if (!(p > 0.0)) throw std::domain_error("smith_exact_rate: requires p > 0");
  const double denom = 1.0 + r * a * p;
  if (denom == 0.0) throw std::domain_error("smith_exact_rate: singular denominator");
  return r * (1.0 - p) / denom;
}

// ---------------------------------------------------------------------------
// model_table: bind a named row from its free parameters
// ---------------------------------------------------------------------------

namespace detail {

class ParamReader {
 public:
  ParamReader(ModelKind kind, const std::map<std::string, double>& params)
      : kind_(kind), params_(params) {}

  double require(const std::string& name) {
    auto it = params_.find(name);
    if (it == params_.end())
      throw std::invalid_argument(row_msg() + ": missing parameter '" + name + "'");
    used_.push_back(name);
    return it->second;
  }

  double optional(const std::string& name, double fallback) {
    auto it = params_.find(name);
    if (it == params_.end()) return fallback;
    used_.push_back(name);
    return it->second;
  }

  // Exactly one of two alternative spellings.
  std::pair<std::string, double> require_one_of(const std::string& n1,
                                                const std::string& n2) {
    const bool h1 = params_.contains(n1), h2 = params_.contains(n2);
    if (h1 == h2)
      throw std::invalid_argument(row_msg() + ": requires exactly one of '" + n1 +
                                  "' or '" + n2 + "'");
    const std::string& name = h1 ? n1 : n2;
    used_.push_back(name);
    return {name, params_.at(name)};
  }

  void finish() const {
    for (const auto& [name, value] : params_) {
      (void)value;
      bool known = false;
      for (const auto& u : used_)
        if (u == name) known = true;
      if (!known)
        throw std::invalid_argument(row_msg() + ": unexpected parameter '" + name + "'");
    }
  }

 private:
  std::string row_msg() const { return std::string(model_row(kind_).name); }

  ModelKind kind_;
  const std::map<std::string, double>& params_;
  std::vector<std::string> used_;
};

}  // namespace detail

/// Binds a model row to a full GrowthParams tuple. `params` must supply
/// exactly the row's free entries (plus p0); over- and under-specification
/// are rejected, as are values outside the row's domain.
inline GrowthParams model_table(ModelKind kind, const std::map<std::string, double>& params) {
  detail::ParamReader in(kind, params);
  GrowthParams P;
  P.p0 = in.require("p0");

  switch (kind) {
    case ModelKind::Malthus: {
      P.q_prime = 0.0;
      P.gamma = 0.0;
      P.q = in.optional("q", 0.0);  // arbitrary: gamma = 0 removes it
      P.kappa = in.require_one_of("r", "kappa").second;
      break;
    }
    case ModelKind::Verhulst: {
      P.q_prime = 0.0;
      P.q = 1.0;
      P.gamma = 1.0;
      P.kappa = in.require_one_of("r", "kappa").second;
      break;
    }
    case ModelKind::Gompertz: {
      P.q_prime = 0.0;
      P.q = 0.0;
      P.gamma = 1.0;
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::HyperGompertz: {
      P.q_prime = 0.0;
      P.q = 0.0;
      P.gamma = in.require("gamma");
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::Richards: {
      P.q_prime = 0.0;
      P.gamma = 1.0;
      P.q = in.require("q");
      if (P.q < -1.0)
        throw std::invalid_argument("Richards: requires q >= -1");
      auto [name, value] = in.require_one_of("r", "kappa");
      P.kappa = (name == "r") ? value * P.q : value;
      break;
    }
    case ModelKind::RichardsSchaefer: {
      P.q_prime = 0.0;
      P.gamma = 1.0;
      P.q = in.require("q");
      if (P.q < -1.0)
        throw std::invalid_argument("RichardsSchaefer: requires q >= -1");
      P.kappa = in.require("kappa");
      P.effort = in.require("epsilon");
      break;
    }
    case ModelKind::Mitscherlich: {
      P.q_prime = 1.0;
      P.q = 1.0;
      P.gamma = 1.0;
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::Blumberg: {
      P.q = 1.0;
      P.q_prime = in.require("qprime");
      P.gamma = in.require("gamma");
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::Turner: {
      P.q = in.require("q");
      P.gamma = in.require("gamma");
      P.kappa = in.require("kappa");
      P.q_prime = P.q * (P.gamma - 1.0);
      break;
    }
    case ModelKind::SpecializedVonBertalanffy: {
      P.q_prime = 1.0 / 3.0;
      P.q = 1.0 / 3.0;
      P.gamma = 1.0;
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::GeneralizedVonBertalanffy: {
      P.q = in.require("q");
      P.q_prime = P.q;
      P.gamma = 1.0;
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::MarusicBajzer: {
      P.q_prime = in.require("qprime");
      P.q = in.require("q");
      P.gamma = 1.0;
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::TsoularisWallace: {
      P.q_prime = in.require("qprime");
      P.q = in.require("q");
      P.gamma = in.require("gamma");
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::ZipfMandelbrotKinetic: {
      P.q = in.require("q");  // kinetic order exponent
      P.q_prime = P.q;
      P.gamma = 0.0;
      P.kappa = in.require("kappa");
      break;
    }
    case ModelKind::SmithApprox: {
      P.q_prime = 1.0 - 0.473;
      P.q = 1.0;
      P.gamma = 1.0;
      P.kappa = in.require("kappa");
      break;
    }
  }
  in.finish();
  P.validate();
  return P;
}

}  // namespace qgrowth

#endif  // QGROWTH_MODELS_HPP
