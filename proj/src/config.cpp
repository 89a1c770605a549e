#include "fcpso/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace fcpso {
namespace {

std::string trim(const std::string& s) {
  auto b = s.begin();
  auto e = s.end();
  while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
  while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
  return {b, e};
}

template <class Fn>
void with(const ConfigFile& cfg, const std::string& section, const std::string& key, Fn fn) {
  if (const auto* e = cfg.find(section, key)) {
    e->used = true;
    try {
      fn(e->value);
    } catch (const std::exception& ex) {
      throw ConfigError(fmt::format("{}:{}: [{}] {}: {}", cfg.origin(), e->line, section, key, ex.what()));
    }
  }
}

void read_mutation(const ConfigFile& cfg, MutationConfig& m) {
  with(cfg, "mutation", "distribution_index", [&](const auto& v) { m.distribution_index = parse_real(v, "distribution_index"); });
  with(cfg, "mutation", "per_variable_probability",
       [&](const auto& v) { m.per_variable_probability = parse_real(v, "per_variable_probability"); });
  with(cfg, "mutation", "particle_fraction", [&](const auto& v) { m.particle_fraction = parse_real(v, "particle_fraction"); });
}

void read_dynamics(const ConfigFile& cfg, const std::string& section, DynamicsConfig& d) {
  with(cfg, section, "inertia", [&](const auto& v) { d.inertia = parse_real(v, "inertia"); });
  with(cfg, section, "scheme", [&](const auto& v) { d.scheme = parse_scheme(v); });
  with(cfg, section, "swarm_size", [&](const auto& v) { d.swarm_size = parse_count(v, "swarm_size"); });
  with(cfg, section, "velocity_init", [&](const auto& v) {
    if (v == "zero") d.velocity_init = VelocityInit::zero;
    else if (v == "uniform") d.velocity_init = VelocityInit::uniform;
    else throw std::invalid_argument(fmt::format("'{}' is not zero or uniform", v));
  });
}

} // namespace

ConfigFile ConfigFile::parse(const std::string& text, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw ConfigError(fmt::format("{}:{}: malformed section header '{}'", origin, lineno, line));
      section = trim(line.substr(1, line.size() - 2));
      if (!cfg.data_.count(section)) cfg.order_.push_back(section);
      cfg.data_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(fmt::format("{}:{}: expected key = value, got '{}'", origin, lineno, line));
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(fmt::format("{}:{}: empty key", origin, lineno));
    if (section.empty())
      throw ConfigError(fmt::format("{}:{}: key '{}' appears before any [section]", origin, lineno, key));
    auto& sec = cfg.data_[section];
    if (sec.count(key))
      throw ConfigError(fmt::format("{}:{}: duplicate key '{}' in [{}]", origin, lineno, key, section));
    sec[key] = Entry{trim(line.substr(eq + 1)), lineno};
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

bool ConfigFile::has_section(const std::string& section) const { return data_.count(section) > 0; }

std::vector<std::string> ConfigFile::sections() const { return order_; }

const ConfigFile::Entry* ConfigFile::find(const std::string& section, const std::string& key) const {
  const auto s = data_.find(section);
  if (s == data_.end()) return nullptr;
  const auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

std::optional<std::string> ConfigFile::get(const std::string& section, const std::string& key) const {
  const auto* e = find(section, key);
  if (!e) return std::nullopt;
  e->used = true;
  return e->value;
}

void ConfigFile::reject_unused() const {
  for (const auto& section : order_)
    for (const auto& [key, e] : data_.at(section))
      if (!e.used)
        throw ConfigError(fmt::format("{}:{}: unknown key '{}' in [{}]", origin_, e.line, key, section));
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ConfigError(fmt::format("{}: '{}' is not a number", what, text));
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!text.empty() && text.front() != '-') v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw ConfigError(fmt::format("{}: '{}' is not a non-negative integer", what, text));
  return static_cast<std::size_t>(v);
}

fairness::ParameterScheme parse_scheme(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 4) throw ConfigError(fmt::format("scheme: expected phi1,phi2,beta1,beta2, got '{}'", text));
  fairness::ParameterScheme s{parse_real(parts[0], "phi1"), parse_real(parts[1], "phi2"),
                              parse_real(parts[2], "beta1"), parse_real(parts[3], "beta2")};
  s.validate();
  return s;
}

ExperimentSpec experiment_from_config(const ConfigFile& cfg) {
  ExperimentSpec spec;
  const std::string ex = "experiment";
  if (!cfg.has_section(ex)) throw ConfigError(fmt::format("{}: missing [experiment] section", cfg.origin()));

  with(cfg, ex, "problems", [&](const auto& v) {
    for (const auto& p : split_list(v)) spec.problems.push_back(parse_problem_spec(p));
  });
  with(cfg, ex, "repetitions", [&](const auto& v) { spec.repetitions = parse_count(v, "repetitions"); });
  with(cfg, ex, "indicators", [&](const auto& v) {
    spec.indicators.clear();
    for (const auto& i : split_list(v)) spec.indicators.push_back(parse_indicator(i));
  });
  with(cfg, ex, "base_seed", [&](const auto& v) { spec.base_seed = parse_count(v, "base_seed"); });
  with(cfg, ex, "max_evaluations", [&](const auto& v) { spec.max_evaluations = parse_count(v, "max_evaluations"); });
  with(cfg, ex, "archive_capacity", [&](const auto& v) { spec.archive_capacity = parse_count(v, "archive_capacity"); });
  with(cfg, ex, "fe_target", [&](const auto& v) { spec.fe_target = parse_real(v, "fe_target"); });
  with(cfg, ex, "workers", [&](const auto& v) { spec.workers = parse_count(v, "workers"); });
  with(cfg, ex, "results_dir", [&](const auto& v) { spec.results_dir = v; });

  DynamicsConfig shared;
  read_dynamics(cfg, "dynamics", shared);
  const bool scheme_override = cfg.find("dynamics", "scheme") != nullptr;

  std::vector<std::string> labels{"smpso", "fcpso"};
  with(cfg, ex, "variants", [&](const auto& v) { labels = split_list(v); });
  for (const auto& label : labels) {
    const std::string section = "variant." + label;
    std::string kind = label;
    with(cfg, section, "variant", [&](const auto& v) { kind = v; });
    VariantSpec vs;
    vs.label = label;
    try {
      vs.dynamics = DynamicsConfig::defaults(parse_variant(kind));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(fmt::format("{}: variant '{}': {}", cfg.origin(), label, e.what()));
    }
    vs.dynamics.inertia = shared.inertia;
    vs.dynamics.swarm_size = shared.swarm_size;
    vs.dynamics.velocity_init = shared.velocity_init;
    if (scheme_override) vs.dynamics.scheme = shared.scheme;
    read_dynamics(cfg, section, vs.dynamics);
    spec.variants.push_back(vs);
  }
  read_mutation(cfg, spec.mutation);

  cfg.reject_unused();
  spec.validate();
  return spec;
}

ProfileSpec profile_from_config(const ConfigFile& cfg) {
  ProfileSpec spec;
  const std::string pr = "profile";
  with(cfg, pr, "problems", [&](const auto& v) {
    for (const auto& p : split_list(v)) spec.problems.push_back(parse_problem_spec(p));
  });
  with(cfg, pr, "mu_grid", [&](const auto& v) {
    for (const auto& m : split_list(v)) spec.mu_grid.push_back(parse_real(m, "mu_grid"));
  });
  with(cfg, pr, "repetitions", [&](const auto& v) { spec.repetitions = parse_count(v, "repetitions"); });
  with(cfg, pr, "base_seed", [&](const auto& v) { spec.base_seed = parse_count(v, "base_seed"); });
  with(cfg, pr, "max_evaluations", [&](const auto& v) { spec.max_evaluations = parse_count(v, "max_evaluations"); });
  with(cfg, pr, "archive_capacity", [&](const auto& v) { spec.archive_capacity = parse_count(v, "archive_capacity"); });
  with(cfg, pr, "swarm_size", [&](const auto& v) { spec.swarm_size = parse_count(v, "swarm_size"); });
  with(cfg, pr, "workers", [&](const auto& v) { spec.workers = parse_count(v, "workers"); });
  read_mutation(cfg, spec.mutation);
  cfg.reject_unused();
  return spec;
}

RunConfig run_config_from_config(const ConfigFile& cfg, Variant variant) {
  RunConfig rc;
  rc.dynamics = DynamicsConfig::defaults(variant);
  with(cfg, "run", "max_evaluations", [&](const auto& v) { rc.max_evaluations = parse_count(v, "max_evaluations"); });
  with(cfg, "run", "archive_capacity", [&](const auto& v) { rc.archive_capacity = parse_count(v, "archive_capacity"); });
  with(cfg, "run", "record_interval", [&](const auto& v) { rc.record_interval = parse_count(v, "record_interval"); });
  with(cfg, "run", "hv_target", [&](const auto& v) {
    rc.termination = Termination::hv_target;
    rc.hv_target_fraction = parse_real(v, "hv_target");
  });
  read_dynamics(cfg, "dynamics", rc.dynamics);
  read_mutation(cfg, rc.mutation);
  cfg.reject_unused();
  return rc;
}

} // namespace fcpso
