#include <algorithm>
#include <cmath>
#include <numbers>

#include "fcpso/dominance.hpp"
#include "fcpso/problems.hpp"
#include "fcpso/rng.hpp"

namespace fcpso {
namespace {

double binomial(std::size_t n, std::size_t r) {
  double c = 1.0;
  for (std::size_t i = 1; i <= r; ++i) c = c * static_cast<double>(n - r + i) / static_cast<double>(i);
  return c;
}

// Das-Dennis lattice on the unit simplex with the largest number of
// divisions whose point count stays within budget.
Front simplex_lattice(std::size_t m, std::size_t budget) {
  std::size_t h = 1;
  while (binomial(h + 1 + m - 1, m - 1) <= static_cast<double>(budget)) ++h;
  Front out;
  std::vector<std::size_t> counts(m, 0);
  auto rec = [&](auto&& self, std::size_t dim, std::size_t left) -> void {
    if (dim + 1 == m) {
      counts[dim] = left;
      ObjectiveVector p(m);
      for (std::size_t j = 0; j < m; ++j) p[j] = static_cast<double>(counts[j]) / static_cast<double>(h);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[dim] = c;
      self(self, dim + 1, left - c);
    }
  };
  rec(rec, 0, h);
  return out;
}

Front thin(Front pts, std::size_t target) {
  std::sort(pts.begin(), pts.end());
  if (pts.size() <= target) return pts;
  Front out;
  out.reserve(target);
  for (std::size_t i = 0; i < target; ++i)
    out.push_back(pts[i * (pts.size() - 1) / (target - 1)]);
  return out;
}

Front linspace_front(double lo, double hi, std::size_t count, double (*f2)(double)) {
  Front out;
  for (std::size_t i = 0; i < count; ++i) {
    const double f1 = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back({f1, f2(f1)});
  }
  return out;
}

// Optimal WFG decision vector for normalised position parameters.
std::vector<double> wfg_optimal(const std::string& name, std::vector<double> pos, std::size_t n) {
  const std::size_t k = pos.size();
  std::vector<double> y = std::move(pos);
  y.resize(n, 0.35);
  if (name == "wfg8") {
    for (std::size_t i = k; i < n; ++i) {
      double u = 0.0;
      for (std::size_t j = 0; j < i; ++j) u += y[j];
      u /= static_cast<double>(i);
      const double t1 = std::fabs(std::floor(0.5 - u) + 0.98 / 49.98);
      const double t2 = 0.02 + 49.98 * (0.98 / 49.98 - (1.0 - 2.0 * u) * t1);
      y[i] = std::pow(0.35, 1.0 / t2);
    }
  } else if (name == "wfg9") {
    y[n - 1] = 0.35;
    for (std::size_t i = n - 1; i-- > k;) {
      double u = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) u += y[j];
      u /= static_cast<double>(n - i - 1);
      y[i] = std::pow(0.35, 1.0 / (0.02 + 1.96 * u));
    }
  }
  for (std::size_t i = 0; i < n; ++i) y[i] = std::min(y[i], 1.0) * 2.0 * static_cast<double>(i + 1);
  return y;
}

} // namespace

std::optional<Front> reference_front(const std::string& name, std::size_t m, std::size_t approx) {
  approx = std::max<std::size_t>(approx, 2);
  if (name == "zdt1" || name == "zdt4")
    return linspace_front(0.0, 1.0, approx, [](double f) { return 1.0 - std::sqrt(f); });
  if (name == "zdt2")
    return linspace_front(0.0, 1.0, approx, [](double f) { return 1.0 - f * f; });
  if (name == "zdt6")
    return linspace_front(0.2807753191, 1.0, approx, [](double f) { return 1.0 - f * f; });
  if (name == "zdt3") {
    const Front dense = linspace_front(0.0, 0.8518328654, approx * 10, [](double f) {
      return 1.0 - std::sqrt(f) - f * std::sin(10.0 * std::numbers::pi * f);
    });
    return thin(nondominated(dense), approx);
  }
  if (name.rfind("dtlz", 0) == 0 && m >= 2) {
    const char id = name.back();
    if (id == '1' || id == '2' || id == '3' || id == '4') {
      Front pts = simplex_lattice(m, approx);
      for (auto& p : pts) {
        if (id == '1') {
          for (auto& v : p) v *= 0.5;
        } else {
          double norm = 0.0;
          for (double v : p) norm += v * v;
          norm = std::sqrt(norm);
          for (auto& v : p) v /= norm;
        }
      }
      return pts;
    }
    const std::size_t dist = (id == '7') ? 20 : 10;
    const std::size_t n = m + dist - 1;
    const double opt = (id == '5') ? 0.5 : 0.0;
    Front pts;
    if (id == '5' || id == '6') {
      for (std::size_t i = 0; i < approx; ++i) {
        std::vector<double> x(n, opt);
        x[0] = static_cast<double>(i) / static_cast<double>(approx - 1);
        pts.push_back(evaluate_dtlz(name, m, x));
      }
      return nondominated(pts);
    }
    if (id == '7') {
      Rng rng(0xd71f);
      for (std::size_t i = 0; i < approx * 10; ++i) {
        std::vector<double> x(n, 0.0);
        for (std::size_t j = 0; j + 1 < m; ++j) x[j] = rng.uniform();
        pts.push_back(evaluate_dtlz(name, m, x));
      }
      return thin(nondominated(pts), approx);
    }
  }
  if (name.rfind("wfg", 0) == 0 && m >= 2) {
    const std::size_t k = 2 * (m - 1);
    const std::size_t n = k + 20;
    Rng rng(0x3f9);
    Front pts;
    for (std::size_t i = 0; i < approx * 5; ++i) {
      std::vector<double> pos(k);
      for (auto& v : pos) v = rng.uniform();
      pts.push_back(evaluate_wfg(name, m, k, wfg_optimal(name, pos, n)));
    }
    return thin(nondominated(pts), approx);
  }
  return std::nullopt;
}

} // namespace fcpso
