#include "fcpso/archive.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fcpso {

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: dimension mismatch");
  bool strictly = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
    if (a[j] < b[j]) strictly = true;
  }
  return strictly;
}

std::vector<std::vector<double>> nondominated(const std::vector<std::vector<double>>& points) {
  std::vector<std::vector<double>> out;
  if (!points.empty() && points.front().size() == 2) {
    // Sort by f1 then f2 and sweep keeping strictly improving f2.
    std::vector<std::size_t> idx(points.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : idx) {
      if (points[i][1] < best) {
        out.push_back(points[i]);
        best = points[i][1];
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < points.size() && keep; ++j) {
      if (i == j) continue;
      if (dominates(points[j], points[i]) || (j < i && points[j] == points[i])) keep = false;
    }
    if (keep) out.push_back(points[i]);
  }
  return out;
}

namespace {

// Crowding distance over any random-access collection; obj(i, j) reads
// objective j of item i.
template <typename Get>
std::vector<double> crowding_impl(std::size_t n, std::size_t k, Get obj) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (n <= 2) return std::vector<double>(n, inf);
  std::vector<double> d(n, 0.0);
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < k; ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return obj(a, j) < obj(b, j); });
    const double lo = obj(order.front(), j);
    const double hi = obj(order.back(), j);
    if (!(hi > lo)) continue;
    d[order.front()] = inf;
    d[order.back()] = inf;
    for (std::size_t i = 1; i + 1 < n; ++i)
      d[order[i]] += (obj(order[i + 1], j) - obj(order[i - 1], j)) / (hi - lo);
  }
  return d;
}

} // namespace

std::vector<double> crowding_distance(const std::vector<std::vector<double>>& objs) {
  const std::size_t k = objs.empty() ? 0 : objs.front().size();
  return crowding_impl(objs.size(), k, [&](std::size_t i, std::size_t j) { return objs[i][j]; });
}

ExternalArchive::ExternalArchive(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("ExternalArchive: capacity must be positive");
  entries_.reserve(capacity + 1);
}

InsertOutcome ExternalArchive::try_insert(ArchiveEntry candidate) {
  for (const auto& e : entries_) {
    if (e.objectives == candidate.objectives || dominates(e.objectives, candidate.objectives))
      return InsertOutcome::dominated;
  }
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(candidate.objectives, e.objectives); });
  entries_.push_back(std::move(candidate));
  if (entries_.size() <= capacity_) return InsertOutcome::inserted;

  refresh_crowding();
  const auto worst = std::min_element(entries_.begin(), entries_.end(),
                                      [](const ArchiveEntry& a, const ArchiveEntry& b) { return a.crowding < b.crowding; });
  entries_.erase(worst);
  return InsertOutcome::replaced_crowded;
}

void ExternalArchive::refresh_crowding() {
  const std::size_t k = entries_.empty() ? 0 : entries_.front().objectives.size();
  const auto d = crowding_impl(entries_.size(), k,
                               [&](std::size_t i, std::size_t j) { return entries_[i].objectives[j]; });
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i].crowding = d[i];
}

const ArchiveEntry& ExternalArchive::select_leader(Rng& rng) const {
  if (entries_.empty()) throw std::logic_error("select_leader: archive is empty");
  if (entries_.size() == 1) return entries_.front();
  const std::size_t a = rng.index(entries_.size());
  std::size_t b = rng.index(entries_.size() - 1);
  if (b >= a) ++b;
  const double ca = entries_[a].crowding;
  const double cb = entries_[b].crowding;
  if (ca > cb) return entries_[a];
  if (cb > ca) return entries_[b];
  return rng.bernoulli(0.5) ? entries_[a] : entries_[b];
}

std::vector<std::vector<double>> ExternalArchive::objective_front() const {
  std::vector<std::vector<double>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.objectives);
  return out;
}

} // namespace fcpso
