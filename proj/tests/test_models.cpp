// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "qgrowth/models.hpp"
#include "oracles.hpp"

using namespace qgrowth;

namespace {

GrowthParams table(ModelKind kind, std::map<std::string, double> params) {
  return model_table(kind, params);
}

const double kE = std::exp(1.0);

}  // namespace

// ---------------------------------------------------------------------------
// rates
// ---------------------------------------------------------------------------

TEST_CASE("saturation_rate reproduces the catalogued relative growth rates") {
  // Malthus: d ln p/dt = r
  auto malthus = table(ModelKind::Malthus, {{"r", 1.0}, {"p0", 0.3}});
  CHECK(saturation_rate(malthus, 0.3) == doctest::Approx(1.0).epsilon(1e-14));
  // Verhulst: d ln p/dt = r (1 - p)
  auto verhulst = table(ModelKind::Verhulst, {{"r", 1.0}, {"p0", 0.25}});
  CHECK(saturation_rate(verhulst, 0.25) == doctest::Approx(0.75).epsilon(1e-14));
  // Gompertz: d ln p/dt = -kappa ln p
  auto gompertz = table(ModelKind::Gompertz, {{"kappa", 1.0}, {"p0", 0.5}});
  CHECK(saturation_rate(gompertz, 1.0 / kE) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rhs_dp_dt") {
  auto mitscherlich = table(ModelKind::Mitscherlich, {{"kappa", 1.0}, {"p0", 0.4}});
  CHECK(rhs_dp_dt(mitscherlich, 0.4) == doctest::Approx(0.6).epsilon(1e-14));
  auto verhulst = table(ModelKind::Verhulst, {{"r", 1.0}, {"p0", 0.5}});
  CHECK(rhs_dp_dt(verhulst, 1.0) == doctest::Approx(0.0).scale(1.0));
  auto richards = table(ModelKind::Richards, {{"q", 0.5}, {"kappa", 1.0}, {"p0", 0.5}});
  CHECK(rhs_dp_dt(richards, 1.0) == doctest::Approx(0.0).scale(1.0));
  // dp/dt = p * d ln p/dt
  for (double p : {0.2, 0.7, 0.95})
    CHECK(rhs_dp_dt(verhulst, p) ==
          doctest::Approx(p * saturation_rate(verhulst, p)).epsilon(1e-13));
  CHECK_THROWS_AS(rhs_dp_dt(verhulst, 0.0), std::domain_error);
  // negative base with non-integer exponent
  auto blumberg = table(ModelKind::Blumberg,
                        {{"qprime", 0.5}, {"gamma", 0.5}, {"kappa", 1.0}, {"p0", 0.5}});
  CHECK_THROWS_AS(rhs_dp_dt(blumberg, 1.5), std::domain_error);
}

// ---------------------------------------------------------------------------
// model_table
// ---------------------------------------------------------------------------

TEST_CASE("model_table bindings") {
  auto verhulst = table(ModelKind::Verhulst, {{"r", 2.0}, {"p0", 0.5}});
  CHECK(verhulst.q_prime == 0.0);
  CHECK(verhulst.q == 1.0);
  CHECK(verhulst.gamma == 1.0);
  CHECK(verhulst.kappa == 2.0);

  auto svb = table(ModelKind::SpecializedVonBertalanffy, {{"kappa", 1.0}, {"p0", 0.5}});
  CHECK(svb.q_prime == doctest::Approx(1.0 / 3.0));
  CHECK(svb.q == doctest::Approx(1.0 / 3.0));
  CHECK(svb.gamma == 1.0);

  // Turner binds the left-hand-side deformation that its closed form solves:
  // q' = q (gamma - 1), which also gives the Richards reduction at gamma = 1.
  auto turner = table(ModelKind::Turner,
                      {{"q", 2.0}, {"gamma", 1.5}, {"kappa", 1.0}, {"p0", 0.5}});
  CHECK(turner.q_prime == doctest::Approx(1.0));
  auto turner_g1 =
      table(ModelKind::Turner, {{"q", 2.0}, {"gamma", 1.0}, {"kappa", 1.0}, {"p0", 0.5}});
  CHECK(turner_g1.q_prime == doctest::Approx(0.0));

  // Richards accepts either the intrinsic rate r (kappa = r q) or kappa.
  auto richards_r = table(ModelKind::Richards, {{"q", 2.0}, {"r", 0.5}, {"p0", 0.5}});
  CHECK(richards_r.kappa == doctest::Approx(1.0));
  auto richards_k = table(ModelKind::Richards, {{"q", 2.0}, {"kappa", 0.8}, {"p0", 0.5}});
  CHECK(richards_k.kappa == doctest::Approx(0.8));

  auto zm = table(ModelKind::ZipfMandelbrotKinetic, {{"q", 0.5}, {"kappa", 2.0}, {"p0", 1.0}});
  CHECK(zm.gamma == 0.0);
  CHECK(zm.q_prime == doctest::Approx(0.5));

  auto smith = table(ModelKind::SmithApprox, {{"kappa", 1.0}, {"p0", 0.5}});
  CHECK(smith.q_prime == doctest::Approx(1.0 - 0.473));
  CHECK(smith.q == 1.0);
}

TEST_CASE("model_table rejects bad inputs") {
  CHECK_THROWS_AS(table(ModelKind::Verhulst, {{"p0", 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(table(ModelKind::Verhulst, {{"r", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(table(ModelKind::Verhulst, {{"r", 1.0}, {"q", 2.0}, {"p0", 0.5}}),
                  std::invalid_argument);  // q is fixed for this row
  CHECK_THROWS_AS(table(ModelKind::Verhulst, {{"r", 1.0}, {"kappa", 1.0}, {"p0", 0.5}}),
                  std::invalid_argument);  // both spellings at once
  CHECK_THROWS_AS(table(ModelKind::Richards, {{"q", -1.5}, {"kappa", 1.0}, {"p0", 0.5}}),
                  std::invalid_argument);  // q >= -1
  CHECK_THROWS_AS(parse_model_kind("NoSuchModel"), std::invalid_argument);
  // p0 above carrying capacity with a fractional exponent
  CHECK_THROWS_AS(
      table(ModelKind::Blumberg,
            {{"qprime", 0.5}, {"gamma", 0.5}, {"kappa", 1.0}, {"p0", 1.5}}),
      std::domain_error);
  // but fine for integer gamma
  CHECK_NOTHROW(table(ModelKind::Verhulst, {{"r", 1.0}, {"p0", 1.5}}));
}

// ---------------------------------------------------------------------------
// closed forms
// ---------------------------------------------------------------------------

TEST_CASE("richards_solution") {
  CHECK(richards_solution(Deformation{1.0}, 1.0, 0.5, 0.0).value == doctest::Approx(0.5));
  // logistic closed form 1/(1 + (1/p0 - 1) e^{-kappa t})
  const double logistic = 1.0 / (1.0 + (1.0 / 0.5 - 1.0) * std::exp(-1.0));
  CHECK(richards_solution(Deformation{1.0}, 1.0, 0.5, 1.0).value ==
        doctest::Approx(logistic).epsilon(1e-12));
  // Gompertz closed form p0^{exp(-kappa t)}, approached from both sides of q = 0
  CHECK(richards_solution(Deformation{0.0}, 1.0, 0.1, 2.0).value ==
        doctest::Approx(std::pow(0.1, std::exp(-2.0))).epsilon(1e-12));
  CHECK(richards_solution(Deformation{1e-9}, 1.0, 0.1, 2.0).value ==
        doctest::Approx(std::pow(0.1, std::exp(-2.0))).epsilon(1e-12));
  CHECK(richards_solution(Deformation{-1e-9}, 1.0, 0.1, 2.0).value ==
        doctest::Approx(std::pow(0.1, std::exp(-2.0))).epsilon(1e-12));
  CHECK(richards_solution(Deformation{0.0}, 1.0, 0.1, 2.0).value ==
        doctest::Approx(0.7322589).epsilon(1e-6));
}

TEST_CASE("richards_solution flags") {
  // repulsive capacity, p0 > 1: finite-time blow-up
  auto diverged = richards_solution(Deformation{1.0}, -1.0, 2.0, 1.0);
  CHECK(diverged.flag == PointFlag::diverged);
  // negative deformation with decaying population: support clamp to zero
  auto clamped = richards_solution(Deformation{-0.5}, -1.0, 0.5, 20.0);
  CHECK(clamped.flag == PointFlag::clamped);
  CHECK(clamped.value == 0.0);
}

TEST_CASE("schaefer_solution") {
  // epsilon = 0 collapses to the Richards curve exactly
  for (double t : {0.0, 0.7, 3.0})
    CHECK(schaefer_solution(Deformation{0.5}, 1.0, 0.0, 0.3, t).value ==
          richards_solution(Deformation{0.5}, 1.0, 0.3, t).value);
  // initial condition
  CHECK(schaefer_solution(Deformation{2.0}, 1.0, -0.1, 0.001, 0.0).value ==
        doctest::Approx(0.001).epsilon(1e-12));
  // asymptote qexp(q, epsilon) = sqrt(0.8)
  CHECK(schaefer_solution(Deformation{2.0}, 1.0, -0.1, 0.001, 60.0).value ==
        doctest::Approx(std::sqrt(0.8)).epsilon(1e-12));
  CHECK_THROWS_AS(schaefer_solution(Deformation{1.0}, 1.0, -2.0, 0.5, 1.0),
                  std::domain_error);  // qexp(1, -2) clamps
}

TEST_CASE("schaefer_solution solves its rescaled-Richards law") {
  // d ln p/dt = -(kappa - q epsilon) ln_q(p / qexp(q, epsilon))
  const Deformation q{2.0};
  const double kappa = 1.0, eps = -0.1, p0 = 0.001;
  const double cap = qexp(q, eps), rate = kappa - q.value() * eps;
  for (double t : {0.5, 1.0, 2.0}) {
    const double fd = oracles::central_derivative(
        [&](double s) { return std::log(schaefer_solution(q, kappa, eps, p0, s).value); },
        t, 1e-5);
    const double p = schaefer_solution(q, kappa, eps, p0, t).value;
    const double stated = -rate * qln(q, p / cap);
    CHECK(fd == doctest::Approx(stated).epsilon(1e-7));
  }
}

TEST_CASE("divergence_time") {
  // root of 1 + (1/p0 - 1) e^{|kappa| t} located independently by bisection
  const double t_star = divergence_time(-1.0, 2.0);
  const double by_bisection = oracles::bisect(
      [](double t) { return 1.0 + (1.0 / 2.0 - 1.0) * std::exp(t); }, 0.0, 10.0, 1e-14);
  CHECK(t_star == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(t_star == doctest::Approx(by_bisection).epsilon(1e-10));
  CHECK(divergence_time(-2.0, 2.0) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(divergence_time(-1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(divergence_time(1.0, 2.0), std::domain_error);
}

TEST_CASE("gvb_solution") {
  CHECK(gvb_solution(Deformation{1.0 / 3.0}, 1.0, 0.2, 0.0).value == doctest::Approx(0.2));
  // against an independent RK4 refinement of d ln_q p/dt = -kappa ln_q p
  const Deformation q{1.0 / 3.0};
  const auto rhs = [&](double, double p) {
    return -1.0 * std::pow(p, 1.0 - q.value()) * qln(q, p);
  };
  const double oracle = oracles::rk4_refine(rhs, 0.2, 1.0, 1e-12);
  CHECK(gvb_solution(q, 1.0, 0.2, 1.0).value == doctest::Approx(oracle).epsilon(1e-9));
  // q -> 0 recovers the Gompertz curve
  CHECK(gvb_solution(Deformation{1e-9}, 1.0, 0.2, 1.5).value ==
        doctest::Approx(std::pow(0.2, std::exp(-1.5))).epsilon(1e-12));
}

TEST_CASE("hyper_gompertz_solution") {
  CHECK(hyper_gompertz_solution(0.7, 1.0, 0.5, 0.0).value == doctest::Approx(0.5));
  // gamma = 0 is exponential growth of ln p: p = p0 e^{kappa t}, past 1 as well
  CHECK(hyper_gompertz_solution(0.0, 1.0, 0.5, 1.0).value ==
        doctest::Approx(0.5 * kE).epsilon(1e-12));
  // gamma = 1 routes to the Gompertz curve
  CHECK(hyper_gompertz_solution(1.0, 1.0, 0.3, 2.0).value ==
        doctest::Approx(std::pow(0.3, std::exp(-2.0))).epsilon(1e-12));
  // non-integer gamma against the RK4 oracle
  const auto rhs = [](double, double p) { return p * std::pow(-std::log(p), 1.5); };
  const double oracle = oracles::rk4_refine(rhs, 0.001, 3.0, 1e-12);
  CHECK(hyper_gompertz_solution(1.5, 1.0, 0.001, 3.0).value ==
        doctest::Approx(oracle).epsilon(1e-9));
  CHECK_THROWS_AS(hyper_gompertz_solution(0.5, 1.0, 1.2, 1.0), std::domain_error);
}

TEST_CASE("turner_solution") {
  CHECK(turner_solution(Deformation{2.0}, 1.5, 1.0, 0.001, 0.0).value ==
        doctest::Approx(0.001));
  // gamma = 1 reduces to Richards
  CHECK(turner_solution(Deformation{0.7}, 1.0, 1.2, 0.05, 2.0).value ==
        richards_solution(Deformation{0.7}, 1.2, 0.05, 2.0).value);
  // against the RK4 oracle of d ln p/dt = kappa p^{q(1-gamma)} (-ln_q p)^gamma
  const Deformation q{2.0};
  const double gamma = 1.5;
  const auto rhs = [&](double, double p) {
    return p * std::pow(p, q.value() * (1.0 - gamma)) *
           std::pow(neg_qln(q, p), gamma);
  };
  const double oracle = oracles::rk4_refine(rhs, 0.001, 5.0, 1e-12);
  CHECK(turner_solution(q, gamma, 1.0, 0.001, 5.0).value ==
        doctest::Approx(oracle).epsilon(1e-6));
  CHECK_THROWS_AS(turner_solution(Deformation{2.0}, 1.5, 1.0, 1.2, 1.0), std::domain_error);
}

TEST_CASE("kinetic_solution") {
  CHECK(kinetic_solution(Deformation{0.5}, 2.0, 1.0, 0.0).value == doctest::Approx(1.0));
  // q = 1: dy/dx = k, linear growth
  CHECK(kinetic_solution(Deformation{1.0}, 1.0, 1.0, 3.0).value == doctest::Approx(4.0));
  // (1 + 0.5 * 2)^2 = 4, cross-checked by the ODE oracle on dy/dx = 2 sqrt(y)
  CHECK(kinetic_solution(Deformation{0.5}, 2.0, 1.0, 1.0).value ==
        doctest::Approx(4.0).epsilon(1e-12));
  const auto rhs = [](double, double y) { return 2.0 * std::sqrt(y); };
  CHECK(kinetic_solution(Deformation{0.5}, 2.0, 1.0, 1.0).value ==
        doctest::Approx(oracles::rk4_refine(rhs, 1.0, 1.0, 1e-12)).epsilon(1e-10));
  // negative deformation: finite-time blow-up of dy/dx = k y^2
  auto blown = kinetic_solution(Deformation{-1.0}, 1.0, 1.0, 1.5);
  CHECK(blown.flag == PointFlag::diverged);
}

// ---------------------------------------------------------------------------
// parameter maps
// ---------------------------------------------------------------------------

TEST_CASE("marusic_map reduces to Richards at alpha = 1") {
  // dy/dx = -2 y + 4 y^{1/2}: carrying capacity y = 4, i.e. q = 1/2, kappa = 1
  auto P = marusic_map(-2.0, 4.0, 1.0, 0.5, 0.25);
  CHECK(P.q_prime == doctest::Approx(0.0));
  CHECK(P.q == doctest::Approx(0.5));
  CHECK(P.gamma == 1.0);
  CHECK(P.kappa == doctest::Approx(1.0));
  // trajectory equivalence: the mapped population is p = 1/(c y) = 4/y, so
  // p0 = 0.25 corresponds to y0 = 16 in the two-term equation
  const auto rhs = [](double, double y) { return -2.0 * y + 4.0 * std::sqrt(y); };
  for (double t : {0.5, 1.5}) {
    const double y = oracles::rk4_refine(rhs, 16.0, t, 1e-11);
    CHECK(richards_solution(Deformation{P.q}, P.kappa, P.p0, t).value ==
          doctest::Approx(4.0 / y).epsilon(1e-8));
  }
}

TEST_CASE("marusic_map recovers the specialized von Bertalanffy form") {
  // alpha = 4/3, beta = 1 -> q' = q = 1/3
  auto P = marusic_map(-1.0, 2.0, 4.0 / 3.0, 1.0, 0.125);
  CHECK(P.q_prime == doctest::Approx(1.0 / 3.0));
  CHECK(P.q == doctest::Approx(1.0 / 3.0));
  CHECK(P.kappa == doctest::Approx(2.0 / 3.0));
  // dy/dx = -y^{4/3} + 2 y: capacity y = 8; start at y0 = 64 (p0 = 1/8)
  const auto rhs = [](double, double y) { return -std::pow(y, 4.0 / 3.0) + 2.0 * y; };
  for (double t : {0.4, 1.2}) {
    const double y = oracles::rk4_refine(rhs, 64.0, t, 1e-11);
    CHECK(gvb_solution(Deformation{P.q}, P.kappa, P.p0, t).value ==
          doctest::Approx(8.0 / y).epsilon(1e-8));
  }
}

TEST_CASE("marusic_map degenerates to the one-term kinetic at alpha = beta") {
  auto P = marusic_map(1.0, 0.5, 1.3, 1.3, 1.0);
  CHECK(P.gamma == 0.0);
  CHECK(P.q_prime == doctest::Approx(-0.3));
  CHECK(P.kappa == doctest::Approx(1.5));
  const auto rhs = [](double, double y) { return 1.5 * std::pow(y, 1.3); };
  const double oracle = oracles::rk4_refine(rhs, 1.0, 0.5, 1e-12);
  CHECK(kinetic_solution(Deformation{P.q_prime}, P.kappa, P.p0, 0.5).value ==
        doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("marusic_map domain errors") {
  CHECK_THROWS_AS(marusic_map(1.0, 1.0, 1.5, 1.2, 0.5), std::domain_error);
  CHECK_NOTHROW(marusic_map(1.0, 1.0, 1.5, 1.0, 0.5));  // integer exponent is fine
  CHECK_THROWS_AS(marusic_map(0.0, 1.0, 1.5, 1.0, 0.5), std::domain_error);
}

TEST_CASE("microscopic interpretation of the deformation") {
  auto [q1, r1] = microscopic_qtilde({.gamma_int = 0.0, .d_f = 2.0});
  CHECK(q1.value() == doctest::Approx(1.0));
  CHECK(r1 == MicroRegime::verhulst);
  auto [q2, r2] = microscopic_qtilde({.gamma_int = 2.0, .d_f = 2.0});
  CHECK(q2.value() == doctest::Approx(0.0));
  CHECK(r2 == MicroRegime::gompertz);
  auto [q3, r3] = microscopic_qtilde({.gamma_int = 4.0, .d_f = 2.0});
  CHECK(q3.value() == doctest::Approx(-1.0));
  CHECK(r3 == MicroRegime::mitscherlich);
  auto [q4, r4] = microscopic_qtilde({.gamma_int = 3.0, .d_f = 2.0});
  CHECK(q4.value() == doctest::Approx(-0.5));
  CHECK(r4 == MicroRegime::exponential_tail);
  auto [q5, r5] = microscopic_qtilde({.gamma_int = 1.0, .d_f = 2.0});
  CHECK(q5.value() == doctest::Approx(0.5));
  CHECK(r5 == MicroRegime::richards);
  CHECK_THROWS_AS(microscopic_qtilde({.gamma_int = 1.0, .d_f = 0.0}), std::domain_error);
}

// ---------------------------------------------------------------------------
// identities and properties
// ---------------------------------------------------------------------------

TEST_CASE("effort rewrite identity kappa w^gamma = kappa gamma qln(gamma, w) + kappa") {
  for (double kappa : {0.5, 2.0}) {
    for (double gamma : {0.25, 1.0, 1.5, 3.0}) {
      for (double q : {0.5, 1.0, 2.0}) {
        for (double p : {0.01, 0.3, 0.9}) {
          const double w = neg_qln(Deformation{q}, p);
          const double lhs = kappa * std::pow(w, gamma);
          const double rhs = kappa * gamma * qln(Deformation{gamma}, w) + kappa;
          CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::max(1.0, std::fabs(lhs)));
        }
      }
    }
  }
}

TEST_CASE("Mitscherlich closed form satisfies dp/dt = kappa (1-p) exactly") {
  const double kappa = 0.8, p0 = 0.2;
  auto P = table(ModelKind::Mitscherlich, {{"kappa", kappa}, {"p0", p0}});
  for (double t : {0.3, 1.0, 4.0}) {
    const double p = mitscherlich_solution(kappa, p0, t).value;
    const double fd = oracles::central_derivative(
        [&](double s) { return mitscherlich_solution(kappa, p0, s).value; }, t, 1e-5);
    CHECK(fd == doctest::Approx(kappa * (1.0 - p)).epsilon(1e-8));
    CHECK(fd == doctest::Approx(rhs_dp_dt(P, p)).epsilon(1e-8));
  }
}

TEST_CASE("stationarity at carrying capacity") {
  const std::vector<GrowthParams> rows = {
      table(ModelKind::Verhulst, {{"r", 1.0}, {"p0", 0.5}}),
      table(ModelKind::Gompertz, {{"kappa", 2.0}, {"p0", 0.5}}),
      table(ModelKind::Richards, {{"q", 0.5}, {"kappa", 1.0}, {"p0", 0.5}}),
      table(ModelKind::Mitscherlich, {{"kappa", 1.0}, {"p0", 0.5}}),
      table(ModelKind::Turner, {{"q", 2.0}, {"gamma", 1.5}, {"kappa", 1.0}, {"p0", 0.5}}),
      table(ModelKind::HyperGompertz, {{"gamma", 1.5}, {"kappa", 1.0}, {"p0", 0.5}}),
  };
  for (const auto& P : rows) CHECK(rhs_dp_dt(P, 1.0) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("closed forms are monotone nondecreasing and bounded by the asymptote") {
  const Deformation q{0.5};
  double prev_r = 0.0, prev_t = 0.0, prev_h = 0.0, prev_g = 0.0;
  for (double t = 0.0; t <= 12.0; t += 0.25) {
    const double r = richards_solution(q, 1.0, 0.01, t).value;
    const double tu = turner_solution(Deformation{2.0}, 1.5, 1.0, 0.01, t).value;
    const double h = hyper_gompertz_solution(1.5, 1.0, 0.01, t).value;
    const double g = gvb_solution(Deformation{1.0 / 3.0}, 1.0, 0.01, t).value;
    CHECK(r >= prev_r);
    CHECK(tu >= prev_t);
    CHECK(h >= prev_h);
    CHECK(g >= prev_g);
    CHECK(r <= 1.0 + 1e-12);
    CHECK(tu <= 1.0 + 1e-12);
    CHECK(h <= 1.0 + 1e-12);
    CHECK(g <= 1.0 + 1e-12);
    prev_r = r;
    prev_t = tu;
    prev_h = h;
    prev_g = g;
  }
  // Schaefer is bounded by qexp(q, epsilon) instead
  const double cap = qexp(Deformation{2.0}, -0.1);
  for (double t = 0.0; t <= 12.0; t += 0.5)
    CHECK(schaefer_solution(Deformation{2.0}, 1.0, -0.1, 0.001, t).value <= cap + 1e-12);
}

TEST_CASE("closed-form trajectories satisfy the unified law") {
  struct Case {
    GrowthParams params;
    std::function<double(double)> solution;
  };
  const std::vector<Case> cases = {
      {table(ModelKind::Verhulst, {{"r", 1.0}, {"p0", 0.001}}),
       [](double t) { return richards_solution(Deformation{1.0}, 1.0, 0.001, t).value; }},
      {table(ModelKind::Richards, {{"q", 2.0}, {"kappa", 1.0}, {"p0", 0.001}}),
       [](double t) { return richards_solution(Deformation{2.0}, 1.0, 0.001, t).value; }},
      {table(ModelKind::Gompertz, {{"kappa", 1.0}, {"p0", 0.001}}),
       [](double t) { return richards_solution(Deformation{0.0}, 1.0, 0.001, t).value; }},
      {table(ModelKind::Mitscherlich, {{"kappa", 1.0}, {"p0", 0.001}}),
       [](double t) { return mitscherlich_solution(1.0, 0.001, t).value; }},
      {table(ModelKind::GeneralizedVonBertalanffy, {{"q", 2.0}, {"kappa", 1.0}, {"p0", 0.001}}),
       [](double t) { return gvb_solution(Deformation{2.0}, 1.0, 0.001, t).value; }},
      {table(ModelKind::HyperGompertz, {{"gamma", 1.5}, {"kappa", 1.0}, {"p0", 0.001}}),
       [](double t) { return hyper_gompertz_solution(1.5, 1.0, 0.001, t).value; }},
      {table(ModelKind::Turner, {{"q", 2.0}, {"gamma", 1.5}, {"kappa", 1.0}, {"p0", 0.001}}),
       [](double t) { return turner_solution(Deformation{2.0}, 1.5, 1.0, 0.001, t).value; }},
      {table(ModelKind::Malthus, {{"r", 1.0}, {"p0", 0.001}}),
       [](double t) { return malthus_solution(1.0, 0.001, t).value; }},
  };
  for (const auto& c : cases) {
    for (double t : {0.5, 1.0, 2.5, 5.0, 9.5}) {
      const double p = c.solution(t);
      const double fd = oracles::central_derivative(c.solution, t, 1e-4);
      const double want = rhs_dp_dt(c.params, p);
      CHECK(std::fabs(fd - want) <= 1e-5 * std::max(std::fabs(want), 1e-3));
    }
  }
}

TEST_CASE("smith exact rate") {
  CHECK(smith_exact_rate(1.0, 0.0, 0.25) == doctest::Approx(0.75));  // a = 0 is Verhulst
  CHECK(smith_exact_rate(2.0, 0.5, 0.5) == doctest::Approx(2.0 * 0.5 / 1.5));
  CHECK_THROWS_AS(smith_exact_rate(1.0, 1.0, 0.0), std::domain_error);
}
