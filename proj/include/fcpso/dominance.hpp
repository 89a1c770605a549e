#pragma once

#include <span>
#include <vector>

namespace fcpso {

/// Pareto dominance for minimisation: a <= b everywhere and a < b somewhere.
/// Throws std::invalid_argument on a dimension mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Brute-force O(N^2) filter; keeps the first of any duplicated vectors.
std::vector<std::vector<double>> nondominated(const std::vector<std::vector<double>>& points);

} // namespace fcpso
