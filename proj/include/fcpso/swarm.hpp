#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fcpso/bounds.hpp"
#include "fcpso/fairness.hpp"
#include "fcpso/rng.hpp"

namespace fcpso {

struct ProblemInstance;

/// One swarm member. momentum is the exponentially-averaged velocity.
struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> momentum;
  std::vector<double> objectives;  // at the current position
  std::vector<double> pbest_position;
  std::vector<double> pbest_objectives;
};

enum class Variant { smpso, em_smpso, fcpso };

std::string to_string(Variant v);
/// Accepts "smpso", "em-smpso", "fcpso"; throws std::invalid_argument otherwise.
Variant parse_variant(const std::string& name);

enum class VelocityInit { zero, uniform };

struct DynamicsConfig {
  Variant variant = Variant::smpso;
  double inertia = 0.1;  // SMPSO only
  // c1 and c2 are each drawn from U(phi1/2, phi2/2); beta from U(beta1, beta2)
  // for the momentum variants.
  fairness::ParameterScheme scheme{3.0, 5.0, 0.0, 1.0};
  std::size_t swarm_size = 100;
  VelocityInit velocity_init = VelocityInit::zero;

  static DynamicsConfig defaults(Variant v);
  bool uses_momentum() const { return variant != Variant::smpso; }
  void validate() const;
};

/// Random quantities consumed by one particle's speed update.
struct SpeedDraws {
  double r1 = 0.0;
  double r2 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double beta = 0.0;
};

SpeedDraws draw_speed(const DynamicsConfig& cfg, Rng& rng);

/// Clamps each component to [-delta_j, delta_j].
void velocity_constriction(std::span<double> v, const BoxBounds& bounds);

/// chi_v(c1 + c2) * [w v + c1 r1 (pbest - x) + c2 r2 (gbest - x)], then clamped.
std::vector<double> compute_speed_smpso(const Particle& p, std::span<const double> gbest,
                                        const SpeedDraws& d, double inertia,
                                        const BoxBounds& bounds);

struct MomentumSpeed {
  std::vector<double> velocity;
  std::vector<double> momentum;
};

/// m' = beta m + (1 - beta) v;
/// v' = chi_m(c1 + c2, beta) * [m' + c1 r1 (pbest - x) + c2 r2 (gbest - x)], then clamped.
MomentumSpeed compute_speed_em(const Particle& p, std::span<const double> gbest, const SpeedDraws& d,
                               const BoxBounds& bounds);

/// x' = x + v; a component leaving the box is set to the bound and its
/// velocity negated.
void update_position(Particle& p, const BoxBounds& bounds);

/// Positions uniform in the box, zero momentum, pbest = initial point.
std::vector<Particle> initialize_swarm(const ProblemInstance& problem, const DynamicsConfig& cfg, Rng& rng);

/// Replaces pbest when the current point dominates it, keeps it when it is
/// dominated, and flips a fair coin otherwise. Returns true on replacement.
bool update_pbest(Particle& p, Rng& rng);

} // namespace fcpso
