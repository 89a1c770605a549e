#pragma once

#include <array>
#include <complex>

// Constriction factors for constricted PSO with and without
// exponentially-averaged momentum, and the deterministic 3-D map
// [v, y, m] whose spectrum motivates them.
namespace fcpso::constriction {

/// State of the deterministic momentum map; y is the displacement g - x.
struct MapState {
  double v = 0.0;
  double y = 0.0;
  double m = 0.0;
};

/// The two non-trivial eigenvalues of the evolution matrix.
/// The third eigenvalue of U is always 0 and is not reported.
struct EigenPair {
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
  double discriminant = 0.0;  // phi^2 - 4 (1 - beta) phi
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// chi(phi) for vanilla constricted PSO: 2 / (2 - phi - sqrt(phi^2 - 4 phi))
/// for phi > 4, otherwise 1. Negative on the active branch.
double chi_vanilla(double phi);

/// chi(phi, beta) for PSO with exponentially-averaged momentum.
/// Active (non-unit) iff activation_event(phi, beta).
double chi_momentum(double phi, double beta);

/// 4 / (1 + beta): phi must strictly exceed this for the momentum
/// constriction to be active.
double activation_threshold(double beta);

bool activation_event(double phi, double beta);

double discriminant(double phi, double beta);

Matrix3 evolution_matrix(double phi, double beta);

MapState step_map(const MapState& s, double phi, double beta);

EigenPair eigenvalues(double phi, double beta);

/// max(|lambda+|, |lambda-|) in closed form; requires a positive
/// discriminant (the complex case is covered by eigenvalues()).
double lambda_max(double phi, double beta);

} // namespace fcpso::constriction
