#include "fcpso/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fcpso {

void MutationConfig::validate() const {
  if (!(distribution_index > 0.0)) throw std::invalid_argument("mutation: distribution_index must be > 0");
  if (per_variable_probability && !(*per_variable_probability >= 0.0 && *per_variable_probability <= 1.0))
    throw std::invalid_argument("mutation: per_variable_probability must lie in [0, 1]");
  if (!(particle_fraction >= 0.0 && particle_fraction <= 1.0))
    throw std::invalid_argument("mutation: particle_fraction must lie in [0, 1]");
}

double MutationConfig::variable_probability(std::size_t n) const {
  if (per_variable_probability) return *per_variable_probability;
  return n == 0 ? 0.0 : 1.0 / static_cast<double>(n);
}

double polynomial_perturb(double x, double lower, double upper, double eta, double u) {
  const double range = upper - lower;
  if (!(range > 0.0)) return lower;
  const double delta1 = (x - lower) / range;
  const double delta2 = (upper - x) / range;
  const double power = 1.0 / (eta + 1.0);
  double deltaq = 0.0;
  if (u <= 0.5) {
    const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - delta1, eta + 1.0);
    deltaq = std::pow(val, power) - 1.0;
  } else {
    const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - delta2, eta + 1.0);
    deltaq = 1.0 - std::pow(val, power);
  }
  return std::clamp(x + deltaq * range, lower, upper);
}

std::vector<double> polynomial_mutate(std::span<const double> x, const BoxBounds& bounds,
                                      const MutationConfig& cfg, Rng& rng) {
  const double prob = cfg.variable_probability(x.size());
  std::vector<double> y(x.begin(), x.end());
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (!rng.bernoulli(prob)) continue;
    y[j] = polynomial_perturb(y[j], bounds.lower(j), bounds.upper(j), cfg.distribution_index, rng.uniform());
  }
  return y;
}

std::size_t apply_turbulence(std::vector<Particle>& swarm, const BoxBounds& bounds,
                             const MutationConfig& cfg, Rng& rng) {
  std::size_t selected = 0;
  for (auto& p : swarm) {
    if (!rng.bernoulli(cfg.particle_fraction)) continue;
    p.position = polynomial_mutate(p.position, bounds, cfg, rng);
    ++selected;
  }
  return selected;
}

} // namespace fcpso
