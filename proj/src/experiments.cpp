#include "fcpso/experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "fcpso/stats.hpp"

namespace fcpso {
namespace {

constexpr double kSignificance = 0.05;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

IndicatorReport measure(const ProblemInstance& problem, const RunResult& r,
                        const std::vector<Indicator>& wanted) {
  IndicatorReport rep;
  const auto front = r.objective_front();
  rep.front_size = front.size();
  rep.reference_point = problem.hv_reference_point;
  for (Indicator ind : wanted) {
    switch (ind) {
      case Indicator::hv: rep.hv = hypervolume(front, problem.hv_reference_point); break;
      case Indicator::igd:
        if (problem.reference_front) rep.igd = igd(front, *problem.reference_front);
        break;
      case Indicator::eps:
        if (problem.reference_front) rep.eps = additive_epsilon(front, *problem.reference_front);
        break;
      case Indicator::sp:
        if (front.size() >= 2) rep.sp = spacing(front);
        break;
      case Indicator::fe:
      case Indicator::size: break;
    }
  }
  return rep;
}

std::optional<double> value_of(const RunRecord& r, Indicator ind) {
  switch (ind) {
    case Indicator::hv: return r.indicators.hv;
    case Indicator::igd: return r.indicators.igd;
    case Indicator::eps: return r.indicators.eps;
    case Indicator::sp: return r.indicators.sp;
    case Indicator::fe: return r.fe;
    case Indicator::size: return static_cast<double>(r.indicators.front_size);
  }
  return std::nullopt;
}

RunConfig make_run_config(const ExperimentSpec& spec, const DynamicsConfig& dyn) {
  RunConfig cfg;
  cfg.dynamics = dyn;
  cfg.mutation = spec.mutation;
  cfg.archive_capacity = spec.archive_capacity;
  cfg.max_evaluations = spec.max_evaluations;
  return cfg;
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

} // namespace

std::string to_string(Indicator i) {
  switch (i) {
    case Indicator::hv: return "hv";
    case Indicator::igd: return "igd";
    case Indicator::eps: return "eps";
    case Indicator::sp: return "sp";
    case Indicator::fe: return "fe";
    case Indicator::size: return "size";
  }
  return "?";
}

Indicator parse_indicator(const std::string& name) {
  for (Indicator i : {Indicator::hv, Indicator::igd, Indicator::eps, Indicator::sp, Indicator::fe, Indicator::size})
    if (to_string(i) == name) return i;
  throw std::invalid_argument(fmt::format("unknown indicator '{}' (valid: hv, igd, eps, sp, fe, size)", name));
}

bool higher_is_better(Indicator i) { return i == Indicator::hv || i == Indicator::size; }

std::string ProblemSpec::label() const {
  return objectives == 0 ? name : fmt::format("{}-{}obj", name, objectives);
}

ProblemSpec parse_problem_spec(const std::string& text) {
  ProblemSpec p;
  const auto colon = text.find(':');
  p.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string obj = text.substr(colon + 1);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(obj, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != obj.size() || v < 2) throw std::invalid_argument(fmt::format("bad objective count in '{}'", text));
    p.objectives = v;
  }
  return p;
}

void ExperimentSpec::validate() const {
  if (problems.empty()) throw ConfigError("experiment: no problems");
  if (variants.empty()) throw ConfigError("experiment: no variants");
  if (repetitions < 2) throw ConfigError("experiment: repetitions must be >= 2");
  if (workers == 0) throw ConfigError("experiment: workers must be >= 1");
  for (const auto& v : variants) v.dynamics.validate();
  mutation.validate();
}

std::vector<double> ExperimentResult::values(const std::string& problem, const std::string& variant,
                                             Indicator ind) const {
  std::vector<std::pair<std::uint64_t, double>> tmp;
  for (const auto& r : runs)
    if (r.problem == problem && r.variant == variant)
      if (auto v = value_of(r, ind)) tmp.emplace_back(r.seed, *v);
  std::sort(tmp.begin(), tmp.end());
  std::vector<double> out;
  for (const auto& [s, v] : tmp) out.push_back(v);
  return out;
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& job) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void write_run_artifacts(const std::filesystem::path& dir, const ProblemInstance& problem,
                         const std::string& variant, const fairness::ParameterScheme& scheme,
                         const RunResult& result) {
  std::filesystem::create_directories(dir);
  write_front_csv(dir / "front.csv", result.objective_front());
  std::ofstream meta(dir / "metadata.txt");
  meta << fmt::format("problem={}\nobjectives={}\nvariant={}\nseed={}\nscheme={}\nevaluations={}\n"
                      "generations={}\nfront_size={}\nproblem_notes={}\n",
                      problem.name, problem.k, variant, result.seed, scheme.to_string(), result.evaluations_used,
                      result.generations, result.front.size(), problem.notes);
  if (!result.hv_trace.empty()) {
    std::ofstream trace(dir / "hv_trace.csv");
    trace << "evaluations,hv\n";
    for (const auto& [e, hv] : result.hv_trace) trace << fmt::format("{},{}\n", e, hv);
  }
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.validate();

  struct Job {
    std::size_t problem;
    std::size_t variant;
    std::size_t rep;
  };
  std::vector<ProblemInstance> problems;
  std::vector<std::string> problem_errors(spec.problems.size());
  for (std::size_t i = 0; i < spec.problems.size(); ++i) {
    try {
      problems.push_back(make_problem(spec.problems[i].name, spec.problems[i].objectives));
    } catch (const std::exception& e) {
      problems.emplace_back();
      problem_errors[i] = e.what();
    }
  }

  std::vector<Job> jobs;
  for (std::size_t p = 0; p < spec.problems.size(); ++p) {
    if (!problem_errors[p].empty()) continue;
    for (std::size_t v = 0; v < spec.variants.size(); ++v)
      for (std::size_t r = 0; r < spec.repetitions; ++r) jobs.push_back({p, v, r});
  }

  const bool want_fe = std::find(spec.indicators.begin(), spec.indicators.end(), Indicator::fe) !=
                       spec.indicators.end();
  std::vector<RunRecord> records(jobs.size());
  parallel_for(jobs.size(), spec.workers, [&](std::size_t j) {
    const Job& job = jobs[j];
    const ProblemInstance& problem = problems[job.problem];
    const VariantSpec& variant = spec.variants[job.variant];
    const std::uint64_t seed = spec.base_seed + job.rep;
    const RunConfig cfg = make_run_config(spec, variant.dynamics);

    const RunResult result = run(problem, cfg, seed);
    RunRecord rec;
    rec.problem = spec.problems[job.problem].label();
    rec.variant = variant.label;
    rec.seed = seed;
    rec.indicators = measure(problem, result, spec.indicators);
    rec.evaluations_used = result.evaluations_used;
    if (want_fe && problem.reference_hv)
      rec.fe = static_cast<double>(run_until_hv(problem, cfg, spec.fe_target, seed).evaluations_used);
    if (spec.results_dir)
      write_run_artifacts(*spec.results_dir / rec.problem / variant.label / std::to_string(seed), problem,
                          variant.label, variant.dynamics.scheme, result);
    records[j] = std::move(rec);
  });

  ExperimentResult out;
  out.runs = std::move(records);
  for (std::size_t p = 0; p < spec.problems.size(); ++p) {
    const std::string label = spec.problems[p].label();
    for (Indicator ind : spec.indicators) {
      for (std::size_t a = 0; a < spec.variants.size(); ++a) {
        for (std::size_t b = a + 1; b < spec.variants.size(); ++b) {
          ComparisonRow row;
          row.problem = label;
          row.indicator = to_string(ind);
          row.variant_a = spec.variants[a].label;
          row.variant_b = spec.variants[b].label;
          if (!problem_errors[p].empty()) {
            row.error = problem_errors[p];
          } else {
            const auto va = out.values(label, row.variant_a, ind);
            const auto vb = out.values(label, row.variant_b, ind);
            if (va.size() < 2 || vb.size() < 2) {
              row.error = fmt::format("{} unavailable for {} (missing reference data)", row.indicator, label);
            } else {
              row.value_a = stats::median(va);
              row.value_b = stats::median(vb);
              row.p_value = stats::mann_whitney_p(va, vb);
            }
          }
          if (!row.error.empty()) {
            row.value_a = row.value_b = std::numeric_limits<double>::quiet_NaN();
            row.winner = "tie";
          } else if (row.p_value < kSignificance && row.value_a != row.value_b) {
            const bool a_better = higher_is_better(ind) ? row.value_a > row.value_b : row.value_a < row.value_b;
            row.winner = a_better ? "a" : "b";
          } else {
            row.winner = "tie";
          }
          out.rows.push_back(std::move(row));
        }
      }
    }
  }
  return out;
}

std::string format_comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "problem,indicator,variant_a,variant_b,median_a,median_b,p_value,winner,error\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.problem, r.indicator, r.variant_a, r.variant_b, r.value_a,
                       r.value_b, r.p_value, r.winner, sanitize(r.error));
  return out;
}

void write_comparison_csv(const std::filesystem::path& path, const std::vector<ComparisonRow>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << format_comparison_csv(rows);
}

std::vector<ComparisonRow> parse_comparison_csv(const std::string& text) {
  std::vector<ComparisonRow> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() < 8) throw std::runtime_error("comparison csv: short row: " + line);
    ComparisonRow r;
    r.problem = f[0];
    r.indicator = f[1];
    r.variant_a = f[2];
    r.variant_b = f[3];
    r.value_a = std::stod(f[4]);
    r.value_b = std::stod(f[5]);
    r.p_value = std::stod(f[6]);
    r.winner = f[7];
    if (f.size() > 8) r.error = f[8];
    rows.push_back(std::move(r));
  }
  return rows;
}

ProfileResult unfairness_profile(const ProfileSpec& spec) {
  if (spec.repetitions < 1) throw ConfigError("profile: repetitions must be >= 1");
  ProfileResult out;

  std::vector<std::pair<double, fairness::ParameterScheme>> grid;
  for (double mu : spec.mu_grid) {
    try {
      grid.emplace_back(mu, fairness::scheme_for_unfairness(mu));
    } catch (const fairness::UnreachableUnfairnessError& e) {
      out.notices.push_back(fmt::format("skipping mu={}: {}", mu, e.what()));
    }
  }

  std::vector<ProblemInstance> problems;
  for (const auto& p : spec.problems) problems.push_back(make_problem(p.name, p.objectives));

  // Column 0 of each problem is the SMPSO baseline; columns 1.. follow the grid.
  const std::size_t cols = grid.size() + 1;
  const std::size_t per_problem = cols * spec.repetitions;
  std::vector<double> hv(problems.size() * per_problem, 0.0);

  parallel_for(hv.size(), spec.workers, [&](std::size_t j) {
    const std::size_t p = j / per_problem;
    const std::size_t c = (j % per_problem) / spec.repetitions;
    const std::size_t rep = j % spec.repetitions;
    RunConfig cfg;
    cfg.mutation = spec.mutation;
    cfg.archive_capacity = spec.archive_capacity;
    cfg.max_evaluations = spec.max_evaluations;
    if (c == 0) {
      cfg.dynamics = DynamicsConfig::defaults(Variant::smpso);
    } else {
      cfg.dynamics = DynamicsConfig::defaults(Variant::em_smpso);
      cfg.dynamics.scheme = grid[c - 1].second;
    }
    cfg.dynamics.swarm_size = spec.swarm_size;
    const RunResult r = run(problems[p], cfg, spec.base_seed + rep);
    hv[j] = hypervolume(r.objective_front(), problems[p].hv_reference_point);
  });

  for (std::size_t p = 0; p < problems.size(); ++p) {
    auto column = [&](std::size_t c) {
      const auto first = hv.begin() + static_cast<std::ptrdiff_t>(p * per_problem + c * spec.repetitions);
      return std::vector<double>(first, first + static_cast<std::ptrdiff_t>(spec.repetitions));
    };
    const double baseline = stats::median(column(0));
    for (std::size_t g = 0; g < grid.size(); ++g) {
      ProfilePoint pt;
      pt.mu = grid[g].first;
      pt.problem = spec.problems[p].label();
      pt.scheme = grid[g].second;
      pt.median_hv = stats::median(column(g + 1));
      pt.baseline_hv = baseline;
      pt.normalized_hv = baseline > 0.0 ? pt.median_hv / baseline : 0.0;
      out.points.push_back(pt);
    }
  }
  return out;
}

std::string format_profile_csv(const std::vector<ProfilePoint>& points) {
  std::string out = "mu,problem,normalized_hv,median_hv,smpso_median_hv,phi1,phi2,beta1,beta2\n";
  for (const auto& p : points)
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", p.mu, p.problem, p.normalized_hv, p.median_hv, p.baseline_hv,
                       p.scheme.phi1, p.scheme.phi2, p.scheme.beta1, p.scheme.beta2);
  return out;
}

} // namespace fcpso
