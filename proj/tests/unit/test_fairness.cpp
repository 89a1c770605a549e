#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fcpso/constriction.hpp"
#include "fcpso/fairness.hpp"
#include "fcpso/rng.hpp"

using namespace fcpso::fairness;
using doctest::Approx;

namespace {

// P(E) by integrating the active phi-length over beta with the midpoint rule.
double integrated_probability(const ParameterScheme& s, int steps = 200000) {
  double acc = 0.0;
  const double h = (s.beta2 - s.beta1) / steps;
  for (int i = 0; i < steps; ++i) {
    const double beta = s.beta1 + (i + 0.5) * h;
    const double lo = std::max(s.phi1, 4.0 / (1.0 + beta));
    acc += std::max(0.0, s.phi2 - lo);
  }
  return acc * h / ((s.beta2 - s.beta1) * (s.phi2 - s.phi1));
}

const double kMuMax = 1.0 - 2.0 * std::log(4.0 / 3.0);

} // namespace

TEST_SUITE("fairness") {

TEST_CASE("activation_probability examples") {
  CHECK(activation_probability({3, 5, 0, 1}) == Approx((3.0 - 4.0 * std::log(4.0 / 3.0)) / 2.0).epsilon(1e-14));
  CHECK(activation_probability({2, 3.4672, 0, 1}) == Approx(0.5).epsilon(5e-4));
  CHECK(activation_probability({2, 4, 0, 1}) == Approx(2.0 - 2.0 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("unfairness examples") {
  CHECK(std::abs(unfairness({3, 5, 0, 1}) - kMuMax) <= 1e-12);
  CHECK(std::abs(unfairness({2, 3.4672, 0, 1})) <= 5e-4);
  // phi2 below every threshold: the activation region is empty
  CHECK(unfairness({1, 2, 0, 0.9}) == -0.5);
  CHECK(unfairness({0.5, 4.0 / 1.5, 0.2, 0.5}) == -0.5);
  // phi1 above every threshold: always active
  CHECK(unfairness({4.5, 6, 0, 1}) == 0.5);
}

TEST_CASE("scheme validation") {
  CHECK_THROWS_AS(activation_probability({5, 3, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(activation_probability({0, 3, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(activation_probability({3, 5, 0.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(activation_probability({3, 5, -0.1, 0.5}), std::domain_error);
  CHECK_THROWS_AS(activation_probability({3, 5, 0, 1.1}), std::domain_error);
}

TEST_CASE("derived band accessors") {
  const ParameterScheme s{3, 5, 0, 1};
  CHECK(s.phi_l() == 3.0);
  CHECK(s.phi_g() == 4.0);
  const ParameterScheme t{1, 3, 0.5, 0.8};
  CHECK(t.phi_l() == Approx(4.0 / 1.8));
  CHECK(t.phi_g() == Approx(8.0 / 3.0));
  CHECK(s.to_string() == "3,5,0,1");
}

TEST_CASE("unfairness_restricted examples") {
  const double third = 1.0 / 3.0;
  CHECK(unfairness_restricted(third) == Approx(0.27391).epsilon(1e-5));
  CHECK(unfairness_restricted(third) == Approx(2.0 * (1.0 - std::log(1.0 + third) / third)).epsilon(1e-12));
  CHECK(unfairness_restricted(third) ==
        Approx(0.5 * (1.0 - (4.0 * std::log(4.0 / 3.0) - 1.0) / third)).epsilon(1e-12));
  CHECK(std::abs(unfairness_restricted(1e-8)) <= 1e-7);
  // the branch-2 formula gives 0.42456 here, not 0.42433
  CHECK(unfairness_restricted(0.999) == Approx(0.5 * (1.0 - (4.0 * std::log(4.0 / 3.0) - 1.0) / 0.999)).epsilon(1e-12));
  CHECK(unfairness_restricted(0.999) == Approx(0.42456).epsilon(1e-5));
  CHECK_THROWS_AS(unfairness_restricted(0.0), std::domain_error);
  CHECK_THROWS_AS(unfairness_restricted(1.0), std::domain_error);
  CHECK_THROWS_AS(unfairness_restricted(-0.2), std::domain_error);
}

TEST_CASE("unfairness_restricted agrees with the general form") {
  for (double eps : {1e-4, 0.01, 0.1, 0.2, 0.3, 1.0 / 3.0, 0.4, 0.6, 0.9, 0.999})
    CHECK(unfairness_restricted(eps) == Approx(unfairness({3, 5, 0, eps})).epsilon(1e-12));
}

TEST_CASE("monte_carlo_activation examples") {
  const auto r = monte_carlo_activation({3, 5, 0, 1}, 1000000, 42);
  CHECK(r.method == Method::monte_carlo);
  CHECK(r.sample_count == 1000000);
  CHECK(std::abs(r.unfairness - kMuMax) <= 0.002);
  CHECK(r.p_activation == Approx(r.unfairness + 0.5));
  CHECK(r.standard_error > 0.0);

  const auto empty = monte_carlo_activation({1, 2, 0, 0.9}, 10000, 1);
  CHECK(empty.p_activation == 0.0);

  const auto again = monte_carlo_activation({3, 5, 0, 1}, 1000000, 42);
  CHECK(again.p_activation == r.p_activation);
}

TEST_CASE("property: closed form matches numerical integration") {
  fcpso::Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    double a = rng.uniform(0.5, 6.0), b = rng.uniform(0.5, 6.0);
    double c = rng.uniform(0.0, 1.0), d = rng.uniform(0.0, 1.0);
    if (std::abs(a - b) < 0.05 || std::abs(c - d) < 0.05) continue;
    const ParameterScheme s{std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)};
    CHECK(activation_probability(s) == Approx(integrated_probability(s)).epsilon(1e-7));
  }
}

TEST_CASE("property: closed form matches sampling within 4 standard errors") {
  fcpso::Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    double a = rng.uniform(1.0, 6.0), b = rng.uniform(1.0, 6.0);
    double c = rng.uniform(0.0, 1.0), d = rng.uniform(0.0, 1.0);
    const ParameterScheme s{std::min(a, b), std::max(a, b) + 0.01, std::min(c, d), std::max(c, d) + 1e-3};
    if (s.beta2 > 1.0) continue;
    const auto mc = monte_carlo_activation(s, 1000000, 100 + t);
    const double p = activation_probability(s);
    const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / 1e6);
    CHECK(std::abs(mc.p_activation - p) <= 4.0 * se + 1e-12);
  }
}

TEST_CASE("property: reports stay in range") {
  fcpso::Rng rng(23);
  for (int t = 0; t < 1000; ++t) {
    double a = rng.uniform(0.01, 10.0), b = rng.uniform(0.01, 10.0);
    double c = rng.uniform(0.0, 1.0), d = rng.uniform(0.0, 1.0);
    if (a == b || c == d) continue;
    const auto r = analytic_report({std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)});
    CHECK(r.p_activation >= 0.0);
    CHECK(r.p_activation <= 1.0);
    CHECK(std::abs(r.unfairness) <= 0.5);
    CHECK(r.p_activation == Approx(r.unfairness + 0.5));
  }
}

TEST_CASE("property: restricted family is increasing, positive and tends to zero") {
  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double eps = i / 1001.0;
    const double mu = unfairness_restricted(eps);
    CHECK(mu > 0.0);
    CHECK(mu > prev);
    prev = mu;
  }
  CHECK(std::abs(unfairness_restricted(1e-6)) < 1e-5);
  // slope near zero approaches 1
  const double h = 1e-6;
  CHECK((unfairness_restricted(2 * h) - unfairness_restricted(h)) / h == Approx(1.0).epsilon(1e-4));
}

TEST_CASE("property: two-dimensional surface formula") {
  fcpso::Rng rng(24);
  for (int t = 0; t < 500; ++t) {
    double a = rng.uniform(2.0, 4.0), b = rng.uniform(2.0, 4.0);
    if (std::abs(a - b) < 1e-3) continue;
    const double p1 = std::min(a, b), p2 = std::max(a, b);
    const double surface = 2.0 - 4.0 * std::log(p2 / p1) / (p2 - p1);
    CHECK(activation_probability({p1, p2, 0, 1}) == Approx(surface).epsilon(1e-10));
  }
}

TEST_CASE("psi and the fair root") {
  CHECK(psi(2.0) == Approx(1.0 / std::log(2.0) - 4.0 / 3.0));
  CHECK(psi(2.0) > 0.0);
  CHECK(psi(1.0 + 1e-9) == Approx(-1.0 / 3.0).epsilon(1e-6));
  const double phi2 = solve_fair_phi2(2.0);
  CHECK(phi2 == Approx(3.4672).epsilon(5e-4 / 3.4672));
  CHECK(std::abs(unfairness({2, phi2, 0, 1})) <= 1e-6);
  CHECK(std::abs(psi(phi2 / 2.0)) <= 1e-9);
}

TEST_CASE("solve_fair_phi2 generalises and reports missing roots") {
  const double phi2 = solve_fair_phi2(2.5);
  CHECK(phi2 > 2.5);
  CHECK(phi2 <= 4.0);
  CHECK(std::abs(unfairness({2.5, phi2, 0, 1})) <= 1e-6);
  CHECK_THROWS_AS(solve_fair_phi2(4.0), NoSolutionError);
  CHECK_THROWS_AS(solve_fair_phi2(3.9), NoSolutionError);
}

TEST_CASE("scheme_for_unfairness examples") {
  const auto fair = scheme_for_unfairness(0.0);
  CHECK(fair.phi1 == 2.0);
  CHECK(fair.phi2 == Approx(3.4672).epsilon(1e-4));
  CHECK(fair.beta1 == 0.0);
  CHECK(fair.beta2 == 1.0);

  const auto third = scheme_for_unfairness(0.27391);
  CHECK(third.phi1 == 3.0);
  CHECK(third.phi2 == 5.0);
  CHECK(third.beta2 == Approx(1.0 / 3.0).epsilon(1e-4));

  const auto low = scheme_for_unfairness(-0.49);
  CHECK(low.phi1 == 2.0);
  CHECK(low.phi2 > 2.0);
  CHECK(low.phi2 < 2.1);

  CHECK_THROWS_AS(scheme_for_unfairness(-0.5), UnreachableUnfairnessError);
  CHECK_THROWS_AS(scheme_for_unfairness(0.43), UnreachableUnfairnessError);
  CHECK_THROWS_AS(scheme_for_unfairness(0.5), UnreachableUnfairnessError);
}

TEST_CASE("property: scheme_for_unfairness hits its target") {
  for (int i = 0; i <= 200; ++i) {
    const double target = -0.4999 + i * (kMuMax + 0.4999) / 200.0;
    const auto s = scheme_for_unfairness(target);
    CHECK(std::abs(unfairness(s) - target) <= 1e-6);
  }
  CHECK(std::abs(unfairness(scheme_for_unfairness(kMuMax)) - kMuMax) <= 1e-12);
}

}
