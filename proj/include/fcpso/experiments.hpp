#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcpso/fairness.hpp"
#include "fcpso/indicators.hpp"
#include "fcpso/mutation.hpp"
#include "fcpso/optimizer.hpp"
#include "fcpso/swarm.hpp"

namespace fcpso {

enum class Indicator { hv, igd, eps, sp, fe, size };

std::string to_string(Indicator i);
Indicator parse_indicator(const std::string& name);
/// True when larger values are better (hv, size).
bool higher_is_better(Indicator i);

struct ProblemSpec {
  std::string name;
  std::size_t objectives = 0;  // 0 = suite default
  std::string label() const;
};

/// "dtlz1" or "dtlz1:5".
ProblemSpec parse_problem_spec(const std::string& text);

struct VariantSpec {
  std::string label;
  DynamicsConfig dynamics;
};

struct ExperimentSpec {
  std::vector<ProblemSpec> problems;
  std::vector<VariantSpec> variants;
  std::size_t repetitions = 20;
  std::vector<Indicator> indicators{Indicator::hv};
  std::uint64_t base_seed = 1;
  std::size_t max_evaluations = 25000;
  std::size_t archive_capacity = 100;
  MutationConfig mutation;
  double fe_target = 0.95;
  std::size_t workers = 1;
  std::optional<std::filesystem::path> results_dir;  // per-run fronts when set

  void validate() const;
};

/// Indicator values of one run.
struct RunRecord {
  std::string problem;
  std::string variant;
  std::uint64_t seed = 0;
  IndicatorReport indicators;
  std::optional<double> fe;  // evaluations to reach the HV target
  std::size_t evaluations_used = 0;
};

struct ComparisonRow {
  std::string problem;
  std::string indicator;
  std::string variant_a;
  std::string variant_b;
  double value_a = 0.0;  // median
  double value_b = 0.0;  // median
  double p_value = 1.0;
  std::string winner;    // a | b | tie
  std::string error;     // non-empty when the row could not be computed
};

struct ExperimentResult {
  std::vector<RunRecord> runs;
  std::vector<ComparisonRow> rows;

  /// Values of one indicator for (problem, variant), ordered by seed.
  std::vector<double> values(const std::string& problem, const std::string& variant, Indicator ind) const;
};

/// seed_i = base_seed + i, shared across variants.
ExperimentResult run_experiment(const ExperimentSpec& spec);

std::string format_comparison_csv(const std::vector<ComparisonRow>& rows);
void write_comparison_csv(const std::filesystem::path& path, const std::vector<ComparisonRow>& rows);
std::vector<ComparisonRow> parse_comparison_csv(const std::string& text);

/// Writes front.csv and metadata.txt for a run into dir.
void write_run_artifacts(const std::filesystem::path& dir, const ProblemInstance& problem,
                         const std::string& variant, const fairness::ParameterScheme& scheme,
                         const RunResult& result);

struct ProfileSpec {
  std::vector<ProblemSpec> problems;
  std::vector<double> mu_grid;
  std::size_t repetitions = 20;
  std::uint64_t base_seed = 1;
  std::size_t max_evaluations = 25000;
  std::size_t archive_capacity = 100;
  std::size_t swarm_size = 100;
  MutationConfig mutation;
  std::size_t workers = 1;
};

struct ProfilePoint {
  double mu = 0.0;
  std::string problem;
  double normalized_hv = 0.0;  // median HV / SMPSO median HV
  double median_hv = 0.0;
  double baseline_hv = 0.0;
  fairness::ParameterScheme scheme;
};

struct ProfileResult {
  std::vector<ProfilePoint> points;
  std::vector<std::string> notices;  // skipped mu values
};

/// For each mu builds a scheme via scheme_for_unfairness, runs the momentum
/// variant with it and normalises its median HV by the SMPSO median.
ProfileResult unfairness_profile(const ProfileSpec& spec);

std::string format_profile_csv(const std::vector<ProfilePoint>& points);

/// Runs job(i) for i in [0, count) on up to `workers` threads. The first
/// exception thrown by any job is rethrown after all threads finish.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& job);

} // namespace fcpso
