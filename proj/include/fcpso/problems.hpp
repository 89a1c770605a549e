#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcpso/bounds.hpp"

namespace fcpso {

using ObjectiveVector = std::vector<double>;
using Front = std::vector<ObjectiveVector>;

/// A box-constrained multi-objective benchmark problem (minimisation).
struct ProblemInstance {
  std::string name;
  std::size_t n = 0;  // decision variables
  std::size_t k = 0;  // objectives
  BoxBounds bounds;
  std::function<ObjectiveVector(std::span<const double>)> evaluate;
  std::optional<Front> reference_front;
  std::optional<double> reference_hv;
  std::vector<double> hv_reference_point;
  std::string notes;  // dimension conventions, recorded in run metadata
};

class FrontParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Names accepted by make_problem.
const std::vector<std::string>& problem_names();

/// Builds a problem by name. objectives = 0 selects the suite default
/// (2 for ZDT, 3 for DTLZ, 5 for WFG); n = 0 selects the canonical
/// decision dimension. Throws std::invalid_argument for unknown names.
ProblemInstance make_problem(const std::string& name, std::size_t objectives = 0,
                             std::size_t n = 0);

// Raw evaluators. They validate bounds and throw std::domain_error.
ObjectiveVector evaluate_zdt(const std::string& name, std::span<const double> x);
ObjectiveVector evaluate_dtlz(const std::string& name, std::size_t m, std::span<const double> x);
ObjectiveVector evaluate_wfg(const std::string& name, std::size_t m, std::size_t k_pos,
                             std::span<const double> x);

/// Sampled theoretical front of a problem (objective space), or nullopt
/// when no generator is available.
std::optional<Front> reference_front(const std::string& name, std::size_t objectives,
                                     std::size_t approx_points = 1000);

/// Reads a front CSV: optional header row f1,...,fk then one point per row.
Front load_reference_front(const std::filesystem::path& path);
Front parse_front_csv(const std::string& text, const std::string& origin = "<string>");

/// Writes header f1..fk and one point per row, full precision.
void write_front_csv(const std::filesystem::path& path, const Front& front);
std::string format_front_csv(const Front& front);

} // namespace fcpso
