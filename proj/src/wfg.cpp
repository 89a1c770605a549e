// WFG toolkit problems: a decision vector is normalised, pushed through a
// problem-specific chain of bias/shift/reduction transformations, and
// mapped onto a shaped front.
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "fcpso/problems.hpp"

namespace fcpso {
namespace {

constexpr double kPi = std::numbers::pi;
using Vec = std::vector<double>;

double clamp01(double y) {
  constexpr double eps = 1e-10;
  if (y < 0.0 && y >= -eps) return 0.0;
  if (y > 1.0 && y <= 1.0 + eps) return 1.0;
  return std::clamp(y, 0.0, 1.0);
}

// --- transformations -------------------------------------------------------

double b_poly(double y, double alpha) { return clamp01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
  const double t1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
  const double t2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
  return clamp01(a + t1 - t2);
}

double b_param(double y, double u, double a, double b, double c) {
  const double v = a - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + a);
  return clamp01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) { return clamp01(std::fabs(y - a) / std::fabs(std::floor(a - y) + a)); }

double s_decept(double y, double a, double b, double c) {
  const double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
  const double t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
  return clamp01(1.0 + (std::fabs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
  const double t1 = std::fabs(y - c) / (2.0 * (std::floor(c - y) + c));
  const double t2 = (4.0 * a + 2.0) * kPi * (0.5 - t1);
  return clamp01((1.0 + std::cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0));
}

double r_sum(const Vec& y, std::size_t from, std::size_t to, const Vec& w) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = from; j < to; ++j) {
    num += w[j] * y[j];
    den += w[j];
  }
  return clamp01(num / den);
}

double r_nonsep(const Vec& y, std::size_t from, std::size_t to, std::size_t a) {
  const std::size_t len = to - from;
  double num = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    num += y[from + j];
    for (std::size_t k = 0; k + 2 <= a; ++k) num += std::fabs(y[from + j] - y[from + (j + k + 1) % len]);
  }
  const double ad = static_cast<double>(a);
  const double half = std::ceil(ad / 2.0);
  const double den = static_cast<double>(len) / ad * half * (1.0 + 2.0 * ad - 2.0 * half);
  return clamp01(num / den);
}

// --- shapes ------------------------------------------------------------------

enum class Shape { linear, convex, concave };

// h_m for m in 1..M over position vector x (length M-1).
double shape_value(Shape s, const Vec& x, std::size_t m, std::size_t M) {
  double h = 1.0;
  for (std::size_t i = 0; i < M - m; ++i) {
    switch (s) {
      case Shape::linear: h *= x[i]; break;
      case Shape::convex: h *= 1.0 - std::cos(x[i] * kPi / 2.0); break;
      case Shape::concave: h *= std::sin(x[i] * kPi / 2.0); break;
    }
  }
  if (m > 1) {
    const double xl = x[M - m];
    switch (s) {
      case Shape::linear: h *= 1.0 - xl; break;
      case Shape::convex: h *= 1.0 - std::sin(xl * kPi / 2.0); break;
      case Shape::concave: h *= std::cos(xl * kPi / 2.0); break;
    }
  }
  return h;
}

double mixed_last(const Vec& x, double alpha, double a) {
  const double t = 2.0 * a * kPi;
  return std::pow(1.0 - x[0] - std::cos(t * x[0] + kPi / 2.0) / t, alpha);
}

double disc_last(const Vec& x, double alpha, double beta, double a) {
  const double c = std::cos(a * std::pow(x[0], beta) * kPi);
  return 1.0 - std::pow(x[0], alpha) * c * c;
}

// --- reductions shared across problems --------------------------------------

// Groups the k position parameters into M-1 blocks and the remainder
// [k, size) into one distance parameter.
Vec reduce_sum(const Vec& y, std::size_t k, std::size_t M, const Vec& w) {
  Vec t(M);
  for (std::size_t i = 0; i + 1 < M; ++i) t[i] = r_sum(y, i * k / (M - 1), (i + 1) * k / (M - 1), w);
  t[M - 1] = r_sum(y, k, y.size(), w);
  return t;
}

Vec reduce_nonsep(const Vec& y, std::size_t k, std::size_t M) {
  Vec t(M);
  for (std::size_t i = 0; i + 1 < M; ++i)
    t[i] = r_nonsep(y, i * k / (M - 1), (i + 1) * k / (M - 1), k / (M - 1));
  t[M - 1] = r_nonsep(y, k, y.size(), y.size() - k);
  return t;
}

// Pairwise non-separable reduction of the distance parameters (WFG2/3).
Vec pair_distance(const Vec& y, std::size_t k) {
  const std::size_t l = y.size() - k;
  Vec out(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k));
  for (std::size_t i = 0; i < l / 2; ++i) out.push_back(r_nonsep(y, k + 2 * i, k + 2 * i + 2, 2));
  return out;
}

// Final mapping from the reduced vector t to objectives.
ObjectiveVector finish(const Vec& t, std::size_t M, Shape shape, const Vec& degeneracy,
                       const std::function<double(const Vec&)>& last) {
  Vec x(M - 1);
  for (std::size_t i = 0; i + 1 < M; ++i) x[i] = std::max(t[M - 1], degeneracy[i]) * (t[i] - 0.5) + 0.5;
  ObjectiveVector f(M);
  for (std::size_t m = 1; m <= M; ++m) {
    const double h = (m == M && last) ? last(x) : shape_value(shape, x, m, M);
    f[m - 1] = t[M - 1] + 2.0 * static_cast<double>(m) * h;
  }
  return f;
}

} // namespace

ObjectiveVector evaluate_wfg(const std::string& name, std::size_t M, std::size_t k,
                             std::span<const double> z) {
  if (name.size() != 4 || name.rfind("wfg", 0) != 0 || name[3] < '1' || name[3] > '9')
    throw std::invalid_argument("evaluate_wfg: unknown problem " + name);
  const std::size_t n = z.size();
  if (M < 2 || k < M - 1 || k % (M - 1) != 0 || n <= k)
    throw std::domain_error(fmt::format("{}: inconsistent sizes M={} k={} n={}", name, M, k, n));
  const int id = name[3] - '0';
  if ((id == 2 || id == 3) && (n - k) % 2 != 0)
    throw std::domain_error(name + ": distance parameter count must be even");

  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = 2.0 * static_cast<double>(i + 1);
    if (!(z[i] >= 0.0 && z[i] <= hi))
      throw std::domain_error(fmt::format("{}: x[{}]={} outside [0, {}]", name, i, z[i], hi));
    y[i] = z[i] / hi;
  }

  const Vec ones(n, 1.0);
  const Vec no_degeneracy(M - 1, 1.0);
  constexpr double kParamA = 0.98 / 49.98;

  switch (id) {
    case 1: {
      for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
      for (std::size_t i = k; i < n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
      for (auto& v : y) v = b_poly(v, 0.02);
      Vec w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = 2.0 * static_cast<double>(i + 1);
      const Vec t = reduce_sum(y, k, M, w);
      return finish(t, M, Shape::convex, no_degeneracy, [](const Vec& x) { return mixed_last(x, 1.0, 5.0); });
    }
    case 2:
    case 3: {
      for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
      const Vec yp = pair_distance(y, k);
      const Vec t = reduce_sum(yp, k, M, ones);
      if (id == 2)
        return finish(t, M, Shape::convex, no_degeneracy,
                      [](const Vec& x) { return disc_last(x, 1.0, 1.0, 5.0); });
      Vec degenerate(M - 1, 0.0);
      degenerate[0] = 1.0;
      return finish(t, M, Shape::linear, degenerate, nullptr);
    }
    case 4:
    case 5: {
      for (auto& v : y) v = (id == 4) ? s_multi(v, 30.0, 10.0, 0.35) : s_decept(v, 0.35, 0.001, 0.05);
      return finish(reduce_sum(y, k, M, ones), M, Shape::concave, no_degeneracy, nullptr);
    }
    case 6: {
      for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
      return finish(reduce_nonsep(y, k, M), M, Shape::concave, no_degeneracy, nullptr);
    }
    case 7:
    case 8: {
      const Vec src = y;
      if (id == 7) {
        for (std::size_t i = 0; i < k; ++i)
          y[i] = b_param(src[i], r_sum(src, i + 1, n, ones), kParamA, 0.02, 50.0);
      } else {
        for (std::size_t i = k; i < n; ++i)
          y[i] = b_param(src[i], r_sum(src, 0, i, ones), kParamA, 0.02, 50.0);
      }
      for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
      return finish(reduce_sum(y, k, M, ones), M, Shape::concave, no_degeneracy, nullptr);
    }
    case 9: {
      const Vec src = y;
      for (std::size_t i = 0; i + 1 < n; ++i)
        y[i] = b_param(src[i], r_sum(src, i + 1, n, ones), kParamA, 0.02, 50.0);
      for (std::size_t i = 0; i < k; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
      for (std::size_t i = k; i < n; ++i) y[i] = s_multi(y[i], 30.0, 95.0, 0.35);
      return finish(reduce_nonsep(y, k, M), M, Shape::concave, no_degeneracy, nullptr);
    }
    default:
      throw std::invalid_argument("evaluate_wfg: unknown problem " + name);
  }
}

} // namespace fcpso
