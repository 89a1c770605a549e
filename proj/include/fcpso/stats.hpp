#pragma once

#include <span>
#include <vector>

namespace fcpso::stats {

double median(std::vector<double> values);

/// Mid-ranks (1-based) with ties averaged.
std::vector<double> ranks(std::span<const double> values);

/// Two-sided Mann-Whitney U p-value. Exact enumeration over all splits of
/// the pooled mid-ranks when the pooled size is <= 16, otherwise a normal
/// approximation with tie and continuity correction. Identical-valued pools give 1.
double mann_whitney_p(std::span<const double> a, std::span<const double> b);

/// Exact two-sided p-value by enumeration (any size; exponential cost).
double mann_whitney_exact(std::span<const double> a, std::span<const double> b);

/// Normal approximation with tie and continuity correction.
double mann_whitney_normal(std::span<const double> a, std::span<const double> b);

/// Spearman rank correlation; 0 when either side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

} // namespace fcpso::stats
