#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace fcpso {

using PointSet = std::vector<std::vector<double>>;

struct IndicatorReport {
  std::optional<double> hv;
  std::optional<double> igd;
  std::optional<double> eps;
  std::optional<double> sp;
  std::vector<double> reference_point;
  std::size_t front_size = 0;
};

/// Dominated hypervolume w.r.t. a reference point (minimisation). Points
/// that do not strictly dominate the reference point are ignored; an empty
/// remainder gives 0. Exact: 2-D sweep, recursive slicing for k >= 3.
double hypervolume(const PointSet& front, const std::vector<double>& reference);

double hypervolume_sweep_2d(const PointSet& front, const std::vector<double>& reference);
/// Slices along the last objective down to the 2-D sweep; valid for any k >= 1.
double hypervolume_slicing(const PointSet& front, const std::vector<double>& reference);

/// Mean distance from each reference point to its nearest front point.
double igd(const PointSet& front, const PointSet& reference);

/// Smallest c such that front - c weakly dominates every reference point.
double additive_epsilon(const PointSet& front, const PointSet& reference);

/// Schott spacing using nearest-neighbour Manhattan distances; needs >= 2 points.
double spacing(const PointSet& front);

} // namespace fcpso
