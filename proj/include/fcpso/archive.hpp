#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "fcpso/dominance.hpp"
#include "fcpso/rng.hpp"

namespace fcpso {

struct ArchiveEntry {
  std::vector<double> position;
  std::vector<double> objectives;
  double crowding = std::numeric_limits<double>::infinity();
};

enum class InsertOutcome { inserted, dominated, replaced_crowded };

/// Crowding distance of each objective vector. Boundary points of an
/// objective get +inf; an objective with zero spread contributes nothing.
std::vector<double> crowding_distance(const std::vector<std::vector<double>>& objectives);

/// Bounded store of mutually non-dominated solutions (the leaders).
class ExternalArchive {
public:
  explicit ExternalArchive(std::size_t capacity = 100);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<ArchiveEntry>& entries() const { return entries_; }

  /// Rejects the candidate if any entry dominates or equals it; otherwise
  /// drops the entries it dominates and adds it. On overflow the entry with
  /// the smallest crowding distance is evicted (possibly the candidate).
  InsertOutcome try_insert(ArchiveEntry candidate);

  /// Recomputes the stored crowding distances; select_leader reads them.
  void refresh_crowding();

  /// Binary tournament on crowding distance. Requires a non-empty archive.
  const ArchiveEntry& select_leader(Rng& rng) const;

  std::vector<std::vector<double>> objective_front() const;

private:
  std::size_t capacity_;
  std::vector<ArchiveEntry> entries_;
};

} // namespace fcpso
