#include "fcpso/optimizer.hpp"

#include <fmt/format.h>

#include "fcpso/indicators.hpp"

namespace fcpso {
namespace {

// Stream identifiers for Rng::derive.
enum Stream : std::uint64_t { kInit = 1, kSpeed = 2, kTurbulence = 3, kMemory = 4 };

} // namespace

void RunConfig::validate() const {
  dynamics.validate();
  mutation.validate();
  if (archive_capacity == 0) throw ConfigError("archive_capacity must be positive");
  if (max_evaluations < dynamics.swarm_size)
    throw ConfigError(fmt::format("max_evaluations ({}) must be >= swarm_size ({})", max_evaluations,
                                  dynamics.swarm_size));
  if (termination == Termination::hv_target && !(hv_target_fraction >= 0.0 && hv_target_fraction <= 1.0))
    throw ConfigError("hv target fraction must lie in [0, 1]");
}

std::vector<std::vector<double>> RunResult::objective_front() const {
  std::vector<std::vector<double>> out;
  out.reserve(front.size());
  for (const auto& e : front) out.push_back(e.objectives);
  return out;
}

RunResult run(const ProblemInstance& problem, const RunConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const bool hv_mode = cfg.termination == Termination::hv_target;
  double hv_goal = 0.0;
  if (hv_mode) {
    if (!problem.reference_hv)
      throw ConfigError(fmt::format("problem {} has no reference hypervolume", problem.name));
    hv_goal = cfg.hv_target_fraction * *problem.reference_hv;
  }
  const bool record = hv_mode || cfg.record_interval > 0;
  if (record && problem.hv_reference_point.size() != problem.k)
    throw ConfigError(fmt::format("problem {} has no HV reference point", problem.name));

  const DynamicsConfig& dyn = cfg.dynamics;
  const BoxBounds& bounds = problem.bounds;
  const std::size_t n_particles = dyn.swarm_size;

  RunResult result;
  result.seed = seed;

  Rng init_rng = Rng::derive(seed, {kInit});
  std::vector<Particle> swarm = initialize_swarm(problem, dyn, init_rng);
  std::size_t evaluations = n_particles;

  ExternalArchive archive(cfg.archive_capacity);
  for (const auto& p : swarm) archive.try_insert({p.position, p.objectives});

  auto archive_hv = [&] { return hypervolume(archive.objective_front(), problem.hv_reference_point); };
  if (record) result.hv_trace.emplace_back(evaluations, archive_hv());

  std::size_t gen = 0;
  while (evaluations + n_particles <= cfg.max_evaluations) {
    archive.refresh_crowding();

    // Leaders are read from the archive as it stood at the start of the generation.
    for (std::size_t i = 0; i < n_particles; ++i) {
      Particle& p = swarm[i];
      Rng rng = Rng::derive(seed, {kSpeed, gen, i});
      const ArchiveEntry& leader = archive.select_leader(rng);
      const SpeedDraws draws = draw_speed(dyn, rng);
      if (dyn.uses_momentum()) {
        auto upd = compute_speed_em(p, leader.position, draws, bounds);
        p.velocity = std::move(upd.velocity);
        p.momentum = std::move(upd.momentum);
      } else {
        p.velocity = compute_speed_smpso(p, leader.position, draws, dyn.inertia, bounds);
      }
    }
    for (auto& p : swarm) update_position(p, bounds);

    Rng turbulence_rng = Rng::derive(seed, {kTurbulence, gen});
    apply_turbulence(swarm, bounds, cfg.mutation, turbulence_rng);

    for (auto& p : swarm) p.objectives = problem.evaluate(p.position);
    evaluations += n_particles;

    for (const auto& p : swarm) archive.try_insert({p.position, p.objectives});

    for (std::size_t i = 0; i < n_particles; ++i) {
      Rng rng = Rng::derive(seed, {kMemory, gen, i});
      update_pbest(swarm[i], rng);
    }
    ++gen;

    if (hv_mode) {
      const double hv = archive_hv();
      result.hv_trace.emplace_back(evaluations, hv);
      if (hv >= hv_goal) {
        result.target_reached = true;
        break;
      }
    } else if (cfg.record_interval > 0 && gen % cfg.record_interval == 0) {
      result.hv_trace.emplace_back(evaluations, archive_hv());
    }
  }

  archive.refresh_crowding();
  result.front = archive.entries();
  result.evaluations_used = evaluations;
  result.generations = gen;
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

RunResult run_until_hv(const ProblemInstance& problem, RunConfig cfg, double target_fraction,
                       std::uint64_t seed) {
  cfg.termination = Termination::hv_target;
  cfg.hv_target_fraction = target_fraction;
  return run(problem, cfg, seed);
}

} // namespace fcpso
