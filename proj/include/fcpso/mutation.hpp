#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fcpso/bounds.hpp"
#include "fcpso/rng.hpp"
#include "fcpso/swarm.hpp"

namespace fcpso {

/// Turbulence settings. An unset per-variable probability means 1/n.
struct MutationConfig {
  double distribution_index = 20.0;
  std::optional<double> per_variable_probability;
  double particle_fraction = 0.15;

  void validate() const;
  double variable_probability(std::size_t n) const;
};

/// Polynomial perturbation of one variable for a given uniform draw u.
/// u = 0.5 leaves x unchanged; the result is clamped to [lower, upper].
double polynomial_perturb(double x, double lower, double upper, double eta, double u);

std::vector<double> polynomial_mutate(std::span<const double> x, const BoxBounds& bounds,
                                      const MutationConfig& cfg, Rng& rng);

/// Mutates the positions of a random subset of particles in place.
/// Returns the number of particles selected.
std::size_t apply_turbulence(std::vector<Particle>& swarm, const BoxBounds& bounds,
                             const MutationConfig& cfg, Rng& rng);

} // namespace fcpso
