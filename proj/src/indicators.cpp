#include "fcpso/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fcpso/dominance.hpp"

namespace fcpso {
namespace {

PointSet strictly_inside(const PointSet& front, const std::vector<double>& ref) {
  PointSet out;
  for (const auto& p : front) {
    if (p.size() != ref.size()) throw std::invalid_argument("hypervolume: dimension mismatch");
    bool ok = true;
    for (std::size_t j = 0; j < p.size() && ok; ++j) ok = p[j] < ref[j];
    if (ok) out.push_back(p);
  }
  return out;
}

void require_nonempty(const PointSet& a, const PointSet& b, const char* what) {
  if (a.empty() || b.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
  const std::size_t k = a.front().size();
  for (const auto& p : a)
    if (p.size() != k) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  for (const auto& p : b)
    if (p.size() != k) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

// Points are assumed strictly inside the reference box.
double sweep2(PointSet pts, double r0, double r1) {
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double ceiling = r1;
  for (const auto& p : pts) {
    if (p[1] < ceiling) {
      area += (r0 - p[0]) * (ceiling - p[1]);
      ceiling = p[1];
    }
  }
  return area;
}

double slice(PointSet pts, const std::vector<double>& ref, std::size_t dims) {
  if (pts.empty()) return 0.0;
  if (dims == 1) {
    double lo = ref[0];
    for (const auto& p : pts) lo = std::min(lo, p[0]);
    return ref[0] - lo;
  }
  if (dims == 2) return sweep2(std::move(pts), ref[0], ref[1]);

  const std::size_t last = dims - 1;
  std::sort(pts.begin(), pts.end(), [last](const auto& a, const auto& b) { return a[last] < b[last]; });
  double volume = 0.0;
  PointSet active;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<double> proj(pts[i].begin(), pts[i].begin() + static_cast<std::ptrdiff_t>(last));
    bool covered = false;
    for (const auto& a : active) {
      bool weak = true;
      for (std::size_t j = 0; j < last && weak; ++j) weak = a[j] <= proj[j];
      if (weak) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      std::erase_if(active, [&](const auto& a) {
        for (std::size_t j = 0; j < last; ++j)
          if (proj[j] > a[j]) return false;
        return true;
      });
      active.push_back(std::move(proj));
    }
    const double top = (i + 1 < pts.size()) ? pts[i + 1][last] : ref[last];
    const double depth = top - pts[i][last];
    if (depth > 0.0) volume += depth * slice(active, ref, last);
  }
  return volume;
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return std::sqrt(s);
}

} // namespace

double hypervolume_sweep_2d(const PointSet& front, const std::vector<double>& ref) {
  if (ref.size() != 2) throw std::invalid_argument("hypervolume_sweep_2d: need 2 objectives");
  return sweep2(strictly_inside(front, ref), ref[0], ref[1]);
}

double hypervolume_slicing(const PointSet& front, const std::vector<double>& ref) {
  if (ref.empty()) throw std::invalid_argument("hypervolume: empty reference point");
  return slice(nondominated(strictly_inside(front, ref)), ref, ref.size());
}

double hypervolume(const PointSet& front, const std::vector<double>& ref) {
  if (ref.size() == 2) return hypervolume_sweep_2d(front, ref);
  return hypervolume_slicing(front, ref);
}

double igd(const PointSet& front, const PointSet& reference) {
  require_nonempty(front, reference, "igd");
  double total = 0.0;
  for (const auto& r : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : front) best = std::min(best, euclidean(p, r));
    total += best;
  }
  return total / static_cast<double>(reference.size());
}

double additive_epsilon(const PointSet& front, const PointSet& reference) {
  require_nonempty(front, reference, "additive_epsilon");
  double eps = -std::numeric_limits<double>::infinity();
  for (const auto& r : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : front) {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < r.size(); ++j) worst = std::max(worst, p[j] - r[j]);
      best = std::min(best, worst);
    }
    eps = std::max(eps, best);
  }
  return eps;
}

double spacing(const PointSet& front) {
  if (front.size() < 2) throw std::invalid_argument("spacing: need at least 2 points");
  const std::size_t n = front.size();
  std::vector<double> d(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double s = 0.0;
      for (std::size_t q = 0; q < front[i].size(); ++q) s += std::fabs(front[i][q] - front[j][q]);
      d[i] = std::min(d[i], s);
    }
  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : d) ss += (mean - v) * (mean - v);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

} // namespace fcpso
