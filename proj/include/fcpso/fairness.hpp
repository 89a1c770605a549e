#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

// Constriction fairness: how often the momentum constriction factor takes
// its active branch when phi ~ U(phi1, phi2) and beta ~ U(beta1, beta2).
namespace fcpso::fairness {

/// Sampling ranges for phi = c1 + c2 and the momentum factor beta.
struct ParameterScheme {
  double phi1 = 3.0;
  double phi2 = 5.0;
  double beta1 = 0.0;
  double beta2 = 1.0;

  /// Throws std::domain_error unless 0 < phi1 < phi2 and 0 <= beta1 < beta2 <= 1.
  void validate() const;

  /// Lower end of the partially active phi band: max(phi1, 4/(1+beta2)).
  double phi_l() const;
  /// Upper end of the partially active phi band: min(4/(1+beta1), phi2).
  double phi_g() const;

  std::string to_string() const;
};

enum class Method { analytic, monte_carlo };

struct FairnessReport {
  double p_activation = 0.0;
  double unfairness = 0.0;
  Method method = Method::analytic;
  std::size_t sample_count = 0;   // monte-carlo only
  double standard_error = 0.0;    // binomial, monte-carlo only
};

class NoSolutionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnreachableUnfairnessError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// P(E) for E = {phi > 4/(1+beta)} in closed form.
double activation_probability(const ParameterScheme& scheme);

/// mu = P(E) - 1/2.
double unfairness(const ParameterScheme& scheme);

FairnessReport analytic_report(const ParameterScheme& scheme);

/// mu for the restricted-momentum family phi ~ U(3,5), beta ~ U(0, epsilon).
double unfairness_restricted(double epsilon);

/// Samples (phi, beta) uniformly and counts activation events.
FairnessReport monte_carlo_activation(const ParameterScheme& scheme, std::size_t samples,
                                      std::uint64_t seed);

/// psi(x) = (x - 1)/ln x - 4/3; its root times 2 is the fair phi2 for phi1 = 2.
double psi(double x);

/// phi2 in (phi1, 4] with unfairness((phi1, phi2, 0, 1)) = 0, by bisection.
double solve_fair_phi2(double phi1 = 2.0);

/// Picks a scheme with the requested unfairness from one of two families:
/// (3, 5, 0, eps) for mu in (0, 1 - 2 ln(4/3)], (2, phi2, 0, 1) for mu in (-1/2, 0].
ParameterScheme scheme_for_unfairness(double target_mu);

} // namespace fcpso::fairness
