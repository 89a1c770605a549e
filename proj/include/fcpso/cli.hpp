#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace fcpso {

/// Runs the command line in-process. args excludes the program name.
/// Exit codes: 0 success, 1 usage or configuration error, 2 runtime failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FCPSO_RESULTS_DIR if set, otherwise ./results.
std::filesystem::path results_root();

/// A spec argument is used as a path if it exists, otherwise it names a
/// bundled spec (with or without the .ini suffix).
std::filesystem::path resolve_spec(const std::string& name);

} // namespace fcpso
