#include "fcpso/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "fcpso/indicators.hpp"

namespace fcpso {

BoxBounds::BoxBounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size())
    throw std::invalid_argument("BoxBounds: lower and upper differ in length");
  delta_.resize(lower_.size());
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!(lower_[j] < upper_[j]))
      throw std::invalid_argument(fmt::format("BoxBounds: lower[{}] must be < upper[{}]", j, j));
    delta_[j] = (upper_[j] - lower_[j]) / 2.0;
  }
}

bool BoxBounds::contains(const std::vector<double>& x) const {
  if (x.size() != size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) return false;
  return true;
}

namespace {

constexpr double kPi = std::numbers::pi;

void require_in_box(std::span<const double> x, const std::vector<double>& lo,
                    const std::vector<double>& hi, const std::string& name) {
  if (x.size() != lo.size())
    throw std::domain_error(fmt::format("{}: expected {} variables, got {}", name, lo.size(), x.size()));
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!(x[j] >= lo[j] && x[j] <= hi[j]))
      throw std::domain_error(
          fmt::format("{}: x[{}]={} outside [{}, {}]", name, j, x[j], lo[j], hi[j]));
}

std::size_t zdt_default_n(const std::string& name) {
  return (name == "zdt4" || name == "zdt6") ? 10 : 30;
}

BoxBounds zdt_bounds(const std::string& name, std::size_t n) {
  std::vector<double> lo(n, 0.0), hi(n, 1.0);
  if (name == "zdt4")
    for (std::size_t j = 1; j < n; ++j) lo[j] = -5.0, hi[j] = 5.0;
  return {lo, hi};
}

std::size_t dtlz_distance_count(const std::string& name) {
  if (name == "dtlz1") return 5;
  if (name == "dtlz7") return 20;
  return 10;
}

bool is_zdt(const std::string& n) {
  return n == "zdt1" || n == "zdt2" || n == "zdt3" || n == "zdt4" || n == "zdt6";
}
bool is_dtlz(const std::string& n) { return n.size() == 5 && n.rfind("dtlz", 0) == 0 && n[4] >= '1' && n[4] <= '7'; }
bool is_wfg(const std::string& n) { return n.size() == 4 && n.rfind("wfg", 0) == 0 && n[3] >= '1' && n[3] <= '9'; }

// Spherical shape shared by DTLZ2-6, applied to angles theta in [0, pi/2].
ObjectiveVector spherical(std::span<const double> theta, double radius, std::size_t m) {
  ObjectiveVector f(m, radius);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j + 1 < m - i; ++j) f[i] *= std::cos(theta[j]);
    if (i > 0) f[i] *= std::sin(theta[m - 1 - i]);
  }
  return f;
}

} // namespace

ObjectiveVector evaluate_zdt(const std::string& name, std::span<const double> x) {
  if (!is_zdt(name)) throw std::invalid_argument("evaluate_zdt: unknown problem " + name);
  const std::size_t n = x.size();
  if (n < 2) throw std::domain_error(name + ": need at least 2 variables");
  const BoxBounds b = zdt_bounds(name, n);
  require_in_box(x, b.lower(), b.upper(), name);

  double tail = 0.0;
  const double f1 = (name == "zdt6")
                        ? 1.0 - std::exp(-4.0 * x[0]) * std::pow(std::sin(6.0 * kPi * x[0]), 6)
                        : x[0];
  double g = 0.0;
  if (name == "zdt4") {
    for (std::size_t j = 1; j < n; ++j) tail += x[j] * x[j] - 10.0 * std::cos(4.0 * kPi * x[j]);
    g = 1.0 + 10.0 * static_cast<double>(n - 1) + tail;
  } else {
    for (std::size_t j = 1; j < n; ++j) tail += x[j];
    if (name == "zdt6")
      g = 1.0 + 9.0 * std::pow(tail / static_cast<double>(n - 1), 0.25);
    else
      g = 1.0 + 9.0 * tail / static_cast<double>(n - 1);
  }
  const double r = f1 / g;
  double h = 0.0;
  if (name == "zdt2" || name == "zdt6")
    h = 1.0 - r * r;
  else if (name == "zdt3")
    h = 1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1);
  else
    h = 1.0 - std::sqrt(r);
  return {f1, g * h};
}

ObjectiveVector evaluate_dtlz(const std::string& name, std::size_t m, std::span<const double> x) {
  if (!is_dtlz(name)) throw std::invalid_argument("evaluate_dtlz: unknown problem " + name);
  if (m < 2) throw std::domain_error(name + ": need at least 2 objectives");
  const std::size_t n = x.size();
  if (n < m) throw std::domain_error(fmt::format("{}: need at least {} variables", name, m));
  require_in_box(x, std::vector<double>(n, 0.0), std::vector<double>(n, 1.0), name);

  const auto pos = x.first(m - 1);
  const auto dist = x.subspan(m - 1);
  const auto kd = static_cast<double>(dist.size());
  const char id = name[4];

  auto rastrigin_g = [&] {
    double s = 0.0;
    for (double xi : dist) s += (xi - 0.5) * (xi - 0.5) - std::cos(20.0 * kPi * (xi - 0.5));
    return 100.0 * (kd + s);
  };
  auto sphere_g = [&] {
    double s = 0.0;
    for (double xi : dist) s += (xi - 0.5) * (xi - 0.5);
    return s;
  };

  switch (id) {
    case '1': {
      const double g = rastrigin_g();
      ObjectiveVector f(m, 0.5 * (1.0 + g));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j + 1 < m - i; ++j) f[i] *= pos[j];
        if (i > 0) f[i] *= 1.0 - pos[m - 1 - i];
      }
      return f;
    }
    case '2':
    case '3':
    case '4': {
      const double g = (id == '3') ? rastrigin_g() : sphere_g();
      const double alpha = (id == '4') ? 100.0 : 1.0;
      std::vector<double> theta(m - 1);
      for (std::size_t j = 0; j + 1 < m; ++j) theta[j] = std::pow(pos[j], alpha) * kPi / 2.0;
      return spherical(theta, 1.0 + g, m);
    }
    case '5':
    case '6': {
      double g = 0.0;
      if (id == '5')
        g = sphere_g();
      else
        for (double xi : dist) g += std::pow(xi, 0.1);
      std::vector<double> theta(m - 1);
      theta[0] = pos[0] * kPi / 2.0;
      for (std::size_t j = 1; j + 1 < m; ++j) theta[j] = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * pos[j]);
      return spherical(theta, 1.0 + g, m);
    }
    case '7': {
      double s = 0.0;
      for (double xi : dist) s += xi;
      const double g = 1.0 + 9.0 / kd * s;
      ObjectiveVector f(m);
      double h = static_cast<double>(m);
      for (std::size_t j = 0; j + 1 < m; ++j) {
        f[j] = pos[j];
        h -= f[j] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[j]));
      }
      f[m - 1] = (1.0 + g) * h;
      return f;
    }
    default:
      throw std::invalid_argument("evaluate_dtlz: unknown problem " + name);
  }
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = {
      "zdt1",  "zdt2",  "zdt3",  "zdt4",  "zdt6",  "dtlz1", "dtlz2", "dtlz3", "dtlz4", "dtlz5", "dtlz6",
      "dtlz7", "wfg1",  "wfg2",  "wfg3",  "wfg4",  "wfg5",  "wfg6",  "wfg7",  "wfg8",  "wfg9"};
  return names;
}

ProblemInstance make_problem(const std::string& name, std::size_t objectives, std::size_t n) {
  ProblemInstance p;
  p.name = name;
  if (is_zdt(name)) {
    if (objectives != 0 && objectives != 2)
      throw std::invalid_argument(name + " has exactly 2 objectives");
    p.k = 2;
    p.n = n ? n : zdt_default_n(name);
    if (p.n < 2) throw std::invalid_argument(name + ": need n >= 2");
    p.bounds = zdt_bounds(name, p.n);
    p.evaluate = [name](std::span<const double> x) { return evaluate_zdt(name, x); };
    p.hv_reference_point = {2.0, 2.0};
    p.notes = fmt::format("n={}", p.n);
  } else if (is_dtlz(name)) {
    p.k = objectives ? objectives : 3;
    if (p.k < 2) throw std::invalid_argument(name + ": need >= 2 objectives");
    const std::size_t dist = dtlz_distance_count(name);
    p.n = n ? n : p.k + dist - 1;
    if (p.n < p.k) throw std::invalid_argument(fmt::format("{}: need n >= {}", name, p.k));
    p.bounds = BoxBounds(std::vector<double>(p.n, 0.0), std::vector<double>(p.n, 1.0));
    const std::size_t m = p.k;
    p.evaluate = [name, m](std::span<const double> x) { return evaluate_dtlz(name, m, x); };
    p.hv_reference_point.assign(p.k, 2.0);
    p.notes = fmt::format("n={} distance_variables={}", p.n, p.n - p.k + 1);
  } else if (is_wfg(name)) {
    p.k = objectives ? objectives : 5;
    if (p.k < 2) throw std::invalid_argument(name + ": need >= 2 objectives");
    const std::size_t k_pos = 2 * (p.k - 1);
    p.n = n ? n : k_pos + 20;
    if (p.n <= k_pos) throw std::invalid_argument(fmt::format("{}: need n > {}", name, k_pos));
    const std::size_t l = p.n - k_pos;
    if ((name == "wfg2" || name == "wfg3") && l % 2 != 0)
      throw std::invalid_argument(name + ": distance parameter count must be even");
    std::vector<double> lo(p.n, 0.0), hi(p.n);
    for (std::size_t j = 0; j < p.n; ++j) hi[j] = 2.0 * static_cast<double>(j + 1);
    p.bounds = BoxBounds(lo, hi);
    const std::size_t m = p.k;
    p.evaluate = [name, m, k_pos](std::span<const double> x) { return evaluate_wfg(name, m, k_pos, x); };
    p.hv_reference_point.resize(p.k);
    for (std::size_t j = 0; j < p.k; ++j) p.hv_reference_point[j] = 2.0 * static_cast<double>(j + 1) + 1.0;
    p.notes = fmt::format("n={} position_parameters={} distance_parameters={}", p.n, k_pos, l);
  } else {
    std::string valid;
    for (const auto& v : problem_names()) valid += (valid.empty() ? "" : ", ") + v;
    throw std::invalid_argument(fmt::format("unknown problem '{}' (valid: {})", name, valid));
  }

  p.reference_front = reference_front(name, p.k);
  if (name == "zdt1" || name == "zdt4")
    p.reference_hv = 11.0 / 3.0;
  else if (name == "zdt2")
    p.reference_hv = 10.0 / 3.0;
  else if (p.reference_front && p.k <= 3)
    p.reference_hv = hypervolume(*p.reference_front, p.hv_reference_point);
  return p;
}

} // namespace fcpso
