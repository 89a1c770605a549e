#include "fcpso/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "fcpso/config.hpp"
#include "fcpso/experiments.hpp"
#include "fcpso/fairness.hpp"
#include "fcpso/indicators.hpp"
#include "fcpso/optimizer.hpp"
#include "fcpso/problems.hpp"

#ifndef FCPSO_SPEC_DIR
#define FCPSO_SPEC_DIR "specs"
#endif

namespace fcpso {
namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kRuntime = 2;

// Input problems that the user can fix: bad files, bad flags, bad values.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) out.push_back(parse_real(s, what));
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += fmt::format("{}{}", i ? "," : "", v[i]);
  return s;
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string problem;
  std::string variant = "fcpso";
  std::size_t objectives = 0;
  std::uint64_t seed = 1;
  std::size_t evaluations = 25000;
  std::size_t swarm_size = 100;
  std::size_t archive = 100;
  std::string scheme;
  double inertia = 0.1;
  double hv_target = 0.95;
  std::string config;
  std::string out_dir;
};

int cmd_solve(CLI::App& cmd, const SolveArgs& a, std::ostream& out) {
  std::string problem_name = a.problem;
  std::string variant_name = a.variant;
  std::size_t objectives = a.objectives;
  std::uint64_t seed = a.seed;

  ConfigFile file;
  if (!a.config.empty()) {
    file = ConfigFile::load(a.config);
    if (auto v = file.get("run", "problem"); v && !cmd.count("--problem")) problem_name = *v;
    if (auto v = file.get("run", "variant"); v && !cmd.count("--variant")) variant_name = *v;
    if (auto v = file.get("run", "objectives"); v && !cmd.count("--objectives")) objectives = parse_count(*v, "objectives");
    if (auto v = file.get("run", "seed"); v && !cmd.count("--seed")) seed = parse_count(*v, "seed");
  }
  if (problem_name.empty()) throw UsageError("solve: --problem is required");

  const Variant variant = parse_variant(variant_name);
  RunConfig cfg = a.config.empty() ? RunConfig{} : run_config_from_config(file, variant);
  if (a.config.empty()) cfg.dynamics = DynamicsConfig::defaults(variant);
  if (cmd.count("--evaluations")) cfg.max_evaluations = a.evaluations;
  if (cmd.count("--swarm-size")) cfg.dynamics.swarm_size = a.swarm_size;
  if (cmd.count("--archive")) cfg.archive_capacity = a.archive;
  if (cmd.count("--scheme")) cfg.dynamics.scheme = parse_scheme(a.scheme);
  if (cmd.count("--inertia")) cfg.dynamics.inertia = a.inertia;
  if (cmd.count("--hv-target")) {
    cfg.termination = Termination::hv_target;
    cfg.hv_target_fraction = a.hv_target;
  }
  cfg.validate();

  const ProblemInstance problem = make_problem(problem_name, objectives);
  const RunResult result = run(problem, cfg, seed);
  const std::string label = ProblemSpec{problem_name, objectives}.label();
  const std::filesystem::path dir =
      a.out_dir.empty() ? results_root() / label / to_string(variant) / std::to_string(seed)
                        : std::filesystem::path(a.out_dir);
  write_run_artifacts(dir, problem, to_string(variant), cfg.dynamics.scheme, result);

  const auto front = result.objective_front();
  fmt::print(out, "problem={}\nobjectives={}\nvariant={}\nseed={}\nscheme={}\n", problem.name, problem.k,
             to_string(variant), seed, cfg.dynamics.scheme.to_string());
  fmt::print(out, "evaluations={}\ngenerations={}\nfront_size={}\n", result.evaluations_used, result.generations,
             front.size());
  fmt::print(out, "hv={}\n", hypervolume(front, problem.hv_reference_point));
  if (problem.reference_front && !front.empty()) fmt::print(out, "igd={}\n", igd(front, *problem.reference_front));
  if (cfg.termination == Termination::hv_target) fmt::print(out, "target_reached={}\n", result.target_reached);
  fmt::print(out, "front={}\n", (dir / "front.csv").string());
  return kOk;
}

// --- benchmark -----------------------------------------------------------

struct BenchmarkArgs {
  std::string spec;
  std::size_t workers = 1;
  std::size_t repetitions = 20;
  std::uint64_t seed = 1;
  std::string out;
  bool runs = false;
};

int cmd_benchmark(CLI::App& cmd, const BenchmarkArgs& a, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec = experiment_from_config(ConfigFile::load(resolve_spec(a.spec)));
  if (cmd.count("--workers")) spec.workers = a.workers;
  if (cmd.count("--repetitions")) spec.repetitions = a.repetitions;
  if (cmd.count("--seed")) spec.base_seed = a.seed;
  if (a.runs && !spec.results_dir) spec.results_dir = results_root() / "runs";
  spec.validate();

  const ExperimentResult result = run_experiment(spec);
  const std::filesystem::path path = a.out.empty() ? results_root() / "comparison.csv" : std::filesystem::path(a.out);
  write_comparison_csv(path, result.rows);

  std::size_t errors = 0;
  for (const auto& r : result.rows) {
    if (!r.error.empty()) {
      ++errors;
      fmt::print(err, "warning: {} {}: {}\n", r.problem, r.indicator, r.error);
      continue;
    }
    fmt::print(out, "row problem={} indicator={} {}={} {}={} p_value={} winner={}\n", r.problem, r.indicator,
               r.variant_a, r.value_a, r.variant_b, r.value_b, r.p_value, r.winner);
  }
  fmt::print(out, "rows={}\nerrors={}\ncomparison={}\n", result.rows.size(), errors, path.string());
  return !result.rows.empty() && errors == result.rows.size() ? kRuntime : kOk;
}

// --- fairness ------------------------------------------------------------

struct FairnessArgs {
  std::string scheme = "3,5,0,1";
  std::size_t monte_carlo = 0;
  std::uint64_t seed = 1;
  bool solve_fair = false;
  double phi1 = 2.0;
  double target_mu = 0.0;
};

void print_report(std::ostream& out, const std::string& prefix, const fairness::FairnessReport& r) {
  fmt::print(out, "{}p_activation={}\n{}mu={}\n", prefix, r.p_activation, prefix, r.unfairness);
  if (r.method == fairness::Method::monte_carlo)
    fmt::print(out, "{}samples={}\n{}standard_error={}\n", prefix, r.sample_count, prefix, r.standard_error);
}

int cmd_fairness(CLI::App& cmd, const FairnessArgs& a, std::ostream& out) {
  if (a.solve_fair) {
    const double phi2 = fairness::solve_fair_phi2(a.phi1);
    const fairness::ParameterScheme s{a.phi1, phi2, 0.0, 1.0};
    fmt::print(out, "phi2={}\nscheme={}\nmu={}\n", phi2, s.to_string(), fairness::unfairness(s));
    return kOk;
  }
  if (cmd.count("--target-mu")) {
    const auto s = fairness::scheme_for_unfairness(a.target_mu);
    fmt::print(out, "target_mu={}\nscheme={}\nmu={}\n", a.target_mu, s.to_string(), fairness::unfairness(s));
    return kOk;
  }
  const auto s = parse_scheme(a.scheme);
  const auto analytic = fairness::analytic_report(s);
  fmt::print(out, "scheme={}\n", s.to_string());
  print_report(out, "", analytic);
  if (a.monte_carlo > 0) {
    const auto mc = fairness::monte_carlo_activation(s, a.monte_carlo, a.seed);
    print_report(out, "mc_", mc);
    fmt::print(out, "abs_difference={}\n", std::abs(mc.p_activation - analytic.p_activation));
  }
  return kOk;
}

// --- profile -------------------------------------------------------------

struct ProfileArgs {
  std::string problems = "zdt1,zdt3,zdt4";
  std::string mu = "-0.4,-0.3,-0.2,-0.1,0,0.1,0.2,0.25,0.3,0.35,0.4,0.42";
  std::size_t repetitions = 20;
  std::uint64_t seed = 1;
  std::size_t evaluations = 25000;
  std::size_t workers = 1;
  std::string config;
  std::string out;
};

int cmd_profile(CLI::App& cmd, const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  ProfileSpec spec;
  if (!a.config.empty()) spec = profile_from_config(ConfigFile::load(a.config));
  if (spec.problems.empty() || cmd.count("--problems")) {
    spec.problems.clear();
    for (const auto& p : split_list(a.problems)) spec.problems.push_back(parse_problem_spec(p));
  }
  if (spec.mu_grid.empty() || cmd.count("--mu")) spec.mu_grid = parse_reals(a.mu, "mu");
  if (a.config.empty() || cmd.count("--repetitions")) spec.repetitions = a.repetitions;
  if (a.config.empty() || cmd.count("--seed")) spec.base_seed = a.seed;
  if (a.config.empty() || cmd.count("--evaluations")) spec.max_evaluations = a.evaluations;
  if (a.config.empty() || cmd.count("--workers")) spec.workers = a.workers;
  if (spec.workers == 0) throw UsageError("profile: workers must be >= 1");

  const auto result = unfairness_profile(spec);
  for (const auto& n : result.notices) fmt::print(err, "notice: {}\n", n);
  const std::filesystem::path path = a.out.empty() ? results_root() / "profile.csv" : std::filesystem::path(a.out);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  file << format_profile_csv(result.points);

  for (const auto& p : result.points)
    fmt::print(out, "point problem={} mu={} normalized_hv={} scheme={}\n", p.problem, p.mu, p.normalized_hv,
               p.scheme.to_string());
  fmt::print(out, "points={}\nprofile={}\n", result.points.size(), path.string());
  return kOk;
}

// --- indicators ----------------------------------------------------------

struct IndicatorArgs {
  std::string front;
  std::string reference;
  std::string ref_point;
  bool hv = false;
  bool igd = false;
  bool eps = false;
  bool sp = false;
};

int cmd_indicators(const IndicatorArgs& a, std::ostream& out) {
  const Front front = load_reference_front(a.front);
  if (front.empty()) throw UsageError(fmt::format("front file '{}' has no points", a.front));
  const std::size_t k = front.front().size();

  std::optional<Front> reference;
  if (!a.reference.empty()) {
    reference = load_reference_front(a.reference);
    if (reference->empty()) throw UsageError(fmt::format("reference file '{}' has no points", a.reference));
    if (reference->front().size() != k)
      throw UsageError(fmt::format("dimension mismatch: front has {} objectives, reference has {}", k,
                                   reference->front().size()));
  }
  std::vector<double> ref_point;
  if (!a.ref_point.empty()) {
    ref_point = parse_reals(a.ref_point, "ref-point");
    if (ref_point.size() != k)
      throw UsageError(fmt::format("dimension mismatch: front has {} objectives, reference point has {}", k,
                                   ref_point.size()));
  }

  const bool any = a.hv || a.igd || a.eps || a.sp;
  if (a.hv && ref_point.empty()) throw UsageError("--hv requires --ref-point");
  if ((a.igd || a.eps) && !reference) throw UsageError("--igd and --eps require --reference");
  if (a.sp && front.size() < 2) throw UsageError("--sp requires at least 2 points");

  fmt::print(out, "front_size={}\nobjectives={}\n", front.size(), k);
  if ((any ? a.hv : !ref_point.empty())) {
    fmt::print(out, "reference_point={}\n", join(ref_point));
    fmt::print(out, "hv={}\n", hypervolume(front, ref_point));
  }
  if (any ? a.igd : reference.has_value()) fmt::print(out, "igd={}\n", igd(front, *reference));
  if (any ? a.eps : reference.has_value()) fmt::print(out, "eps={}\n", additive_epsilon(front, *reference));
  if (any ? a.sp : front.size() >= 2) fmt::print(out, "sp={}\n", spacing(front));
  return kOk;
}

} // namespace

std::filesystem::path results_root() {
  if (const char* env = std::getenv("FCPSO_RESULTS_DIR"); env && *env) return env;
  return "results";
}

std::filesystem::path resolve_spec(const std::string& name) {
  if (std::filesystem::exists(name)) return name;
  const std::filesystem::path dir = FCPSO_SPEC_DIR;
  for (const auto& candidate : {dir / name, dir / (name + ".ini")})
    if (std::filesystem::exists(candidate)) return candidate;
  throw UsageError(fmt::format("spec '{}' is neither a file nor a bundled spec in {}", name, dir.string()));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-objective particle swarm optimizers with momentum and constriction fairness", "fcpso"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run one optimization and write its front");
  s->add_option("--problem", solve.problem, "Problem name, e.g. zdt1, dtlz2, wfg4");
  s->add_option("--variant", solve.variant, "smpso, em-smpso or fcpso");
  s->add_option("--objectives", solve.objectives, "Objective count (0 = suite default)");
  s->add_option("--seed", solve.seed, "Random seed");
  s->add_option("--evaluations", solve.evaluations, "Evaluation budget");
  s->add_option("--swarm-size", solve.swarm_size, "Swarm size");
  s->add_option("--archive", solve.archive, "External archive capacity");
  s->add_option("--scheme", solve.scheme, "phi1,phi2,beta1,beta2 (default depends on variant)");
  s->add_option("--inertia", solve.inertia, "Inertia weight (smpso only)");
  s->add_option("--hv-target", solve.hv_target, "Stop once HV reaches this fraction of the optimum");
  s->add_option("--config", solve.config, "Config file with [run], [dynamics], [mutation]");
  s->add_option("--out", solve.out_dir, "Output directory (default: results/<problem>/<variant>/<seed>)");

  BenchmarkArgs bench;
  auto* b = app.add_subcommand("benchmark", "Run an experiment spec and write comparison.csv");
  b->add_option("spec", bench.spec, "Spec file or bundled spec name (zdt-quick, paper-zdt-dtlz)")->required();
  b->add_option("--workers", bench.workers, "Concurrent runs");
  b->add_option("--repetitions", bench.repetitions, "Override repetitions");
  b->add_option("--seed", bench.seed, "Override base seed");
  b->add_option("--out", bench.out, "comparison.csv path (default: results/comparison.csv)");
  b->add_flag("--runs", bench.runs, "Also write per-run fronts under results/runs");

  FairnessArgs fair;
  auto* f = app.add_subcommand("fairness", "Activation probability and unfairness of a parameter scheme");
  f->add_option("--scheme", fair.scheme, "phi1,phi2,beta1,beta2");
  f->add_option("--monte-carlo", fair.monte_carlo, "Also estimate by sampling N points (0 = off)");
  f->add_option("--seed", fair.seed, "Seed for --monte-carlo");
  f->add_flag("--solve-fair", fair.solve_fair, "Solve for phi2 giving mu = 0 with beta ~ U(0,1)");
  f->add_option("--phi1", fair.phi1, "phi1 for --solve-fair");
  f->add_option("--target-mu", fair.target_mu, "Build a scheme with this unfairness");

  ProfileArgs prof;
  auto* p = app.add_subcommand("profile", "Normalized HV of the momentum variant across unfairness values");
  p->add_option("--problems", prof.problems, "Comma-separated problems");
  p->add_option("--mu", prof.mu, "Comma-separated unfairness grid");
  p->add_option("--repetitions", prof.repetitions, "Runs per grid point");
  p->add_option("--seed", prof.seed, "Base seed");
  p->add_option("--evaluations", prof.evaluations, "Evaluation budget per run");
  p->add_option("--workers", prof.workers, "Concurrent runs");
  p->add_option("--config", prof.config, "Config file with [profile], [mutation]");
  p->add_option("--out", prof.out, "profile.csv path (default: results/profile.csv)");

  IndicatorArgs ind;
  auto* i = app.add_subcommand("indicators", "Quality indicators of a front CSV");
  i->add_option("--front", ind.front, "Front CSV")->required();
  i->add_option("--reference", ind.reference, "Reference front CSV (for igd, eps)");
  i->add_option("--ref-point", ind.ref_point, "HV reference point, comma-separated");
  i->add_flag("--hv", ind.hv, "Hypervolume");
  i->add_flag("--igd", ind.igd, "Inverted generational distance");
  i->add_flag("--eps", ind.eps, "Additive epsilon");
  i->add_flag("--sp", ind.sp, "Spacing");

  std::vector<const char*> argv{"fcpso"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(*s, solve, out);
    if (b->parsed()) return cmd_benchmark(*b, bench, out, err);
    if (f->parsed()) return cmd_fairness(*f, fair, out);
    if (p->parsed()) return cmd_profile(*p, prof, out, err);
    if (i->parsed()) return cmd_indicators(ind, out);
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const FrontParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::domain_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kRuntime;
  }
  return kUsage;
}

} // namespace fcpso
