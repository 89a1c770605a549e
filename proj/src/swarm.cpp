#include "fcpso/swarm.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "fcpso/constriction.hpp"
#include "fcpso/dominance.hpp"
#include "fcpso/problems.hpp"

namespace fcpso {
namespace {

void check_dims(const Particle& p, std::span<const double> gbest) {
  const std::size_t n = p.position.size();
  if (gbest.size() != n || p.velocity.size() != n || p.pbest_position.size() != n)
    throw std::invalid_argument("compute_speed: dimension mismatch");
}

} // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::smpso: return "smpso";
    case Variant::em_smpso: return "em-smpso";
    case Variant::fcpso: return "fcpso";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  if (name == "smpso") return Variant::smpso;
  if (name == "em-smpso") return Variant::em_smpso;
  if (name == "fcpso") return Variant::fcpso;
  throw std::invalid_argument(fmt::format("unknown variant '{}' (valid: smpso, em-smpso, fcpso)", name));
}

DynamicsConfig DynamicsConfig::defaults(Variant v) {
  DynamicsConfig cfg;
  cfg.variant = v;
  if (v == Variant::fcpso) cfg.scheme = {2.0, 3.4672, 0.0, 1.0};
  return cfg;
}

void DynamicsConfig::validate() const {
  scheme.validate();
  if (swarm_size < 2) throw std::invalid_argument("swarm_size must be >= 2");
}

SpeedDraws draw_speed(const DynamicsConfig& cfg, Rng& rng) {
  SpeedDraws d;
  d.r1 = rng.uniform();
  d.r2 = rng.uniform();
  d.c1 = rng.uniform(cfg.scheme.phi1 / 2.0, cfg.scheme.phi2 / 2.0);
  d.c2 = rng.uniform(cfg.scheme.phi1 / 2.0, cfg.scheme.phi2 / 2.0);
  if (cfg.uses_momentum()) {
    d.beta = rng.uniform(cfg.scheme.beta1, cfg.scheme.beta2);
    d.beta = std::min(d.beta, std::nextafter(1.0, 0.0));
  }
  return d;
}

void velocity_constriction(std::span<double> v, const BoxBounds& bounds) {
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::clamp(v[j], -bounds.delta(j), bounds.delta(j));
}

std::vector<double> compute_speed_smpso(const Particle& p, std::span<const double> gbest,
                                        const SpeedDraws& d, double inertia,
                                        const BoxBounds& bounds) {
  check_dims(p, gbest);
  const double chi = constriction::chi_vanilla(d.c1 + d.c2);
  std::vector<double> v(p.position.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double x = p.position[j];
    v[j] = chi * (inertia * p.velocity[j] + d.c1 * d.r1 * (p.pbest_position[j] - x) +
                  d.c2 * d.r2 * (gbest[j] - x));
  }
  velocity_constriction(v, bounds);
  return v;
}

MomentumSpeed compute_speed_em(const Particle& p, std::span<const double> gbest, const SpeedDraws& d,
                               const BoxBounds& bounds) {
  check_dims(p, gbest);
  if (p.momentum.size() != p.position.size()) throw std::invalid_argument("compute_speed: dimension mismatch");
  const double chi = constriction::chi_momentum(d.c1 + d.c2, d.beta);
  MomentumSpeed out{std::vector<double>(p.position.size()), std::vector<double>(p.position.size())};
  for (std::size_t j = 0; j < out.velocity.size(); ++j) {
    const double x = p.position[j];
    out.momentum[j] = d.beta * p.momentum[j] + (1.0 - d.beta) * p.velocity[j];
    out.velocity[j] = chi * (out.momentum[j] + d.c1 * d.r1 * (p.pbest_position[j] - x) +
                             d.c2 * d.r2 * (gbest[j] - x));
  }
  velocity_constriction(out.velocity, bounds);
  return out;
}

void update_position(Particle& p, const BoxBounds& bounds) {
  for (std::size_t j = 0; j < p.position.size(); ++j) {
    double x = p.position[j] + p.velocity[j];
    if (x < bounds.lower(j)) {
      x = bounds.lower(j);
      p.velocity[j] = -p.velocity[j];
    } else if (x > bounds.upper(j)) {
      x = bounds.upper(j);
      p.velocity[j] = -p.velocity[j];
    }
    p.position[j] = x;
  }
}

std::vector<Particle> initialize_swarm(const ProblemInstance& problem, const DynamicsConfig& cfg, Rng& rng) {
  cfg.validate();
  const std::size_t n = problem.n;
  std::vector<Particle> swarm(cfg.swarm_size);
  for (auto& p : swarm) {
    p.position.resize(n);
    p.velocity.assign(n, 0.0);
    p.momentum.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      p.position[j] = rng.uniform(problem.bounds.lower(j), problem.bounds.upper(j));
      if (cfg.velocity_init == VelocityInit::uniform)
        p.velocity[j] = rng.uniform(-problem.bounds.delta(j), problem.bounds.delta(j));
    }
    p.objectives = problem.evaluate(p.position);
    p.pbest_position = p.position;
    p.pbest_objectives = p.objectives;
  }
  return swarm;
}

bool update_pbest(Particle& p, Rng& rng) {
  bool replace = false;
  if (dominates(p.objectives, p.pbest_objectives))
    replace = true;
  else if (dominates(p.pbest_objectives, p.objectives))
    replace = false;
  else
    replace = rng.bernoulli(0.5);
  if (replace) {
    p.pbest_position = p.position;
    p.pbest_objectives = p.objectives;
  }
  return replace;
}

} // namespace fcpso
