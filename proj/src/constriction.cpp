#include "fcpso/constriction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcpso::constriction {
namespace {

void check_phi(double phi) {
  if (!std::isfinite(phi) || phi <= 0.0)
    throw std::domain_error("constriction: phi must be finite and > 0, got " + std::to_string(phi));
}

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0 || beta >= 1.0)
    throw std::domain_error("constriction: beta must lie in [0, 1), got " + std::to_string(beta));
}

} // namespace

double chi_vanilla(double phi) {
  check_phi(phi);
  if (phi <= 4.0) return 1.0;
  return 2.0 / (2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
}

double activation_threshold(double beta) {
  check_beta(beta);
  return 4.0 / (1.0 + beta);
}

bool activation_event(double phi, double beta) {
  check_phi(phi);
  return phi > activation_threshold(beta);
}

double discriminant(double phi, double beta) {
  check_phi(phi);
  check_beta(beta);
  return phi * phi - 4.0 * (1.0 - beta) * phi;
}

double chi_momentum(double phi, double beta) {
  if (!activation_event(phi, beta)) return 1.0;
  // phi > 4/(1+beta) implies phi > 4(1-beta); a negative value here can
  // only come from rounding at the threshold.
  const double delta = std::max(0.0, discriminant(phi, beta));
  return 2.0 / (2.0 - phi - std::sqrt(delta));
}

Matrix3 evolution_matrix(double phi, double beta) {
  check_phi(phi);
  check_beta(beta);
  return {{{1.0 - beta, phi, beta},
           {beta - 1.0, 1.0 - phi, -beta},
           {1.0 - beta, 0.0, beta}}};
}

MapState step_map(const MapState& s, double phi, double beta) {
  check_phi(phi);
  check_beta(beta);
  return {(1.0 - beta) * s.v + phi * s.y + beta * s.m,
          (beta - 1.0) * s.v + (1.0 - phi) * s.y - beta * s.m,
          (1.0 - beta) * s.v + beta * s.m};
}

EigenPair eigenvalues(double phi, double beta) {
  const double delta = discriminant(phi, beta);
  const std::complex<double> root = std::sqrt(std::complex<double>(delta, 0.0));
  const std::complex<double> trace(2.0 - phi, 0.0);
  return {(trace + root) / 2.0, (trace - root) / 2.0, delta};
}

double lambda_max(double phi, double beta) {
  const double delta = discriminant(phi, beta);
  if (delta <= 0.0)
    throw std::domain_error("lambda_max: discriminant must be positive (complex eigenvalues)");
  return (std::abs(phi - 2.0) + std::sqrt(delta)) / 2.0;
}

} // namespace fcpso::constriction
