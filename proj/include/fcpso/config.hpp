#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcpso/experiments.hpp"
#include "fcpso/optimizer.hpp"

namespace fcpso {

/// Flat key=value text with [section] headers. '#' and ';' start comments.
class ConfigFile {
public:
  struct Entry {
    std::string value;
    std::size_t line = 0;
    mutable bool used = false;
  };

  static ConfigFile parse(const std::string& text, const std::string& origin = "<string>");
  static ConfigFile load(const std::filesystem::path& path);

  bool has_section(const std::string& section) const;
  std::vector<std::string> sections() const;
  const Entry* find(const std::string& section, const std::string& key) const;
  std::optional<std::string> get(const std::string& section, const std::string& key) const;

  /// Throws ConfigError naming the first key no reader consumed.
  void reject_unused() const;

  const std::string& origin() const { return origin_; }

private:
  std::string origin_;
  std::vector<std::string> order_;
  std::map<std::string, std::map<std::string, Entry>> data_;
};

/// Sections: [experiment], [dynamics], [mutation], [variant.LABEL].
ExperimentSpec experiment_from_config(const ConfigFile& cfg);
/// Sections: [profile], [mutation].
ProfileSpec profile_from_config(const ConfigFile& cfg);
/// Sections: [run], [dynamics], [mutation]; `variant` in [run] picks the defaults.
RunConfig run_config_from_config(const ConfigFile& cfg, Variant variant);

std::vector<std::string> split_list(const std::string& text, char sep = ',');
double parse_real(const std::string& text, const std::string& what);
std::size_t parse_count(const std::string& text, const std::string& what);
fairness::ParameterScheme parse_scheme(const std::string& text);

} // namespace fcpso
