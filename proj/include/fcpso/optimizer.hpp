#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fcpso/archive.hpp"
#include "fcpso/mutation.hpp"
#include "fcpso/problems.hpp"
#include "fcpso/swarm.hpp"

namespace fcpso {

enum class Termination { evaluation_budget, hv_target };

struct RunConfig {
  DynamicsConfig dynamics;
  MutationConfig mutation;
  std::size_t archive_capacity = 100;
  std::size_t max_evaluations = 25000;
  Termination termination = Termination::evaluation_budget;
  double hv_target_fraction = 0.95;  // of problem.reference_hv, hv_target mode only
  // Record archive HV every this many generations under the budget mode; 0 = never.
  std::size_t record_interval = 0;

  void validate() const;
};

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct RunResult {
  std::vector<ArchiveEntry> front;
  std::size_t evaluations_used = 0;
  std::size_t generations = 0;
  std::vector<std::pair<std::size_t, double>> hv_trace;  // (evaluations, hv)
  bool target_reached = false;
  std::uint64_t seed = 0;
  std::chrono::duration<double> wall_time{0};

  std::vector<std::vector<double>> objective_front() const;
};

/// Runs the generation loop: speed, position, turbulence, evaluation,
/// archive update, memory update, until the configured termination.
RunResult run(const ProblemInstance& problem, const RunConfig& cfg, std::uint64_t seed);

/// As run(), stopping at the first generation whose archive HV reaches
/// target_fraction * problem.reference_hv (or when the budget is spent).
RunResult run_until_hv(const ProblemInstance& problem, RunConfig cfg, double target_fraction,
                       std::uint64_t seed);

} // namespace fcpso
