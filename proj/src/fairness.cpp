#include "fcpso/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "fcpso/constriction.hpp"
#include "fcpso/rng.hpp"

namespace fcpso::fairness {
namespace {

constexpr double kBisectionTol = 1e-13;

// ln(b / a) for b >= a > 0, accurate when b is close to a.
double log_ratio(double a, double b) { return std::log1p((b - a) / a); }

// Finds x in [lo, hi] with f(x) = 0 given f(lo) < 0 < f(hi), f increasing.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > kBisectionTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Largest unfairness reachable by the restricted-momentum family (eps = 1).
const double kMaxRestricted = 1.0 - 2.0 * std::log(4.0 / 3.0);

} // namespace

void ParameterScheme::validate() const {
  if (!std::isfinite(phi1) || !std::isfinite(phi2) || phi1 <= 0.0 || phi1 >= phi2)
    throw std::domain_error(fmt::format("scheme: need 0 < phi1 < phi2, got phi1={} phi2={}", phi1, phi2));
  if (!std::isfinite(beta1) || !std::isfinite(beta2) || beta1 < 0.0 || beta1 >= beta2 || beta2 > 1.0)
    throw std::domain_error(
        fmt::format("scheme: need 0 <= beta1 < beta2 <= 1, got beta1={} beta2={}", beta1, beta2));
}

double ParameterScheme::phi_l() const { return std::max(phi1, 4.0 / (1.0 + beta2)); }

double ParameterScheme::phi_g() const { return std::min(4.0 / (1.0 + beta1), phi2); }

std::string ParameterScheme::to_string() const {
  return fmt::format("{},{},{},{}", phi1, phi2, beta1, beta2);
}

double activation_probability(const ParameterScheme& s) {
  s.validate();
  const double p_phi = 1.0 / (s.phi2 - s.phi1);
  const double p_beta = 1.0 / (s.beta2 - s.beta1);

  // For fixed phi the event is beta > 4/phi - 1. Below phi_l it is
  // impossible, above 4/(1+beta1) it is certain, in between the beta
  // mass above the threshold is (beta2 + 1 - 4/phi) p_beta.
  double partial = 0.0;
  const double lo = s.phi_l();
  const double hi = s.phi_g();
  if (hi > lo)
    partial = p_beta * ((s.beta2 + 1.0) * (hi - lo) - 4.0 * log_ratio(lo, hi));

  const double certain_from = std::max(s.phi1, 4.0 / (1.0 + s.beta1));
  const double certain = std::max(0.0, s.phi2 - certain_from);

  return std::clamp(p_phi * (partial + certain), 0.0, 1.0);
}

double unfairness(const ParameterScheme& scheme) { return activation_probability(scheme) - 0.5; }

FairnessReport analytic_report(const ParameterScheme& scheme) {
  FairnessReport r;
  r.p_activation = activation_probability(scheme);
  r.unfairness = r.p_activation - 0.5;
  r.method = Method::analytic;
  return r;
}

double unfairness_restricted(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon >= 1.0)
    throw std::domain_error(fmt::format("unfairness_restricted: epsilon must lie in (0, 1), got {}", epsilon));
  if (epsilon < 1.0 / 3.0) return 2.0 * (1.0 - std::log1p(epsilon) / epsilon);
  return 0.5 * (1.0 - (4.0 * std::log(4.0 / 3.0) - 1.0) / epsilon);
}

FairnessReport monte_carlo_activation(const ParameterScheme& scheme, std::size_t samples,
                                      std::uint64_t seed) {
  scheme.validate();
  if (samples == 0) throw std::invalid_argument("monte_carlo_activation: samples must be >= 1");
  Rng rng = Rng::derive(seed, {0xfa1});
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double phi = rng.uniform(scheme.phi1, scheme.phi2);
    // beta2 may be 1; a draw in [beta1, beta2) stays inside the domain.
    const double beta = rng.uniform(scheme.beta1, scheme.beta2);
    if (constriction::activation_event(phi, std::min(beta, std::nextafter(1.0, 0.0)))) ++hits;
  }
  FairnessReport r;
  const double n = static_cast<double>(samples);
  r.p_activation = static_cast<double>(hits) / n;
  r.unfairness = r.p_activation - 0.5;
  r.method = Method::monte_carlo;
  r.sample_count = samples;
  r.standard_error = std::sqrt(r.p_activation * (1.0 - r.p_activation) / n);
  return r;
}

double psi(double x) {
  if (!(x > 0.0) || x == 1.0) throw std::domain_error("psi: x must be positive and != 1");
  return (x - 1.0) / std::log(x) - 4.0 / 3.0;
}

double solve_fair_phi2(double phi1) {
  if (!std::isfinite(phi1) || phi1 <= 0.0 || phi1 >= 4.0)
    throw NoSolutionError(fmt::format("solve_fair_phi2: no bracket for phi1={}", phi1));
  auto mu = [phi1](double phi2) { return unfairness({phi1, phi2, 0.0, 1.0}); };
  double lo = phi1 + 1e-12 * std::max(1.0, phi1);
  double hi = 4.0;
  if (!(mu(lo) < 0.0 && mu(hi) > 0.0))
    throw NoSolutionError(fmt::format("solve_fair_phi2: unfairness has no sign change on ({}, 4]", phi1));
  return bisect(mu, lo, hi);
}

ParameterScheme scheme_for_unfairness(double target_mu) {
  if (!std::isfinite(target_mu) || target_mu <= -0.5 || target_mu > kMaxRestricted)
    throw UnreachableUnfairnessError(fmt::format(
        "scheme_for_unfairness: target {} outside the covered range (-0.5, {}]", target_mu, kMaxRestricted));

  if (target_mu > 0.0) {
    if (target_mu == kMaxRestricted) return {3.0, 5.0, 0.0, 1.0};
    auto f = [target_mu](double eps) { return unfairness({3.0, 5.0, 0.0, eps}) - target_mu; };
    return {3.0, 5.0, 0.0, bisect(f, 1e-15, 1.0)};
  }

  // mu(phi2) for (2, phi2, 0, 1) rises from -1/2 as phi2 -> 2 to about 0.114 at 4.
  auto f = [target_mu](double phi2) { return unfairness({2.0, phi2, 0.0, 1.0}) - target_mu; };
  return {2.0, bisect(f, 2.0 + 1e-12, 4.0), 0.0, 1.0};
}

} // namespace fcpso::fairness
