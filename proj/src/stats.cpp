#include "fcpso/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fcpso::stats {
namespace {

constexpr std::size_t kExactLimit = 16;

void require_samples(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("mann_whitney: each sample needs >= 2 values");
}

std::vector<double> pooled(std::span<const double> a, std::span<const double> b) {
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return all;
}

double rank_sum_first(const std::vector<double>& r, std::size_t n1) {
  return std::accumulate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n1), 0.0);
}

bool all_equal(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

} // namespace

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median: empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && values[idx[j]] == values[idx[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t q = i; q < j; ++q) r[idx[q]] = mid;
    i = j;
  }
  return r;
}

double mann_whitney_exact(std::span<const double> a, std::span<const double> b) {
  require_samples(a, b);
  const auto all = pooled(a, b);
  if (all_equal(all)) return 1.0;
  const auto r = ranks(all);
  const std::size_t n1 = a.size();
  const std::size_t n = all.size();
  const double n1d = static_cast<double>(n1);
  const double u_obs = rank_sum_first(r, n1) - n1d * (n1d + 1.0) / 2.0;

  // Enumerate every n1-subset of the pooled ranks.
  constexpr double tol = 1e-9;
  std::size_t le = 0, ge = 0, total = 0;
  std::vector<std::size_t> pick(n1);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    double s = 0.0;
    for (std::size_t i : pick) s += r[i];
    const double u = s - n1d * (n1d + 1.0) / 2.0;
    if (u <= u_obs + tol) ++le;
    if (u >= u_obs - tol) ++ge;
    ++total;
    std::size_t i = n1;
    while (i > 0 && pick[i - 1] == n - n1 + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n1; ++j) pick[j] = pick[j - 1] + 1;
  }
  const double t = static_cast<double>(total);
  const double p = 2.0 * std::min(static_cast<double>(le) / t, static_cast<double>(ge) / t);
  return std::min(1.0, p);
}

double mann_whitney_normal(std::span<const double> a, std::span<const double> b) {
  require_samples(a, b);
  const auto all = pooled(a, b);
  if (all_equal(all)) return 1.0;
  const auto r = ranks(all);
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  const double u = rank_sum_first(r, a.size()) - n1 * (n1 + 1.0) / 2.0;

  std::vector<double> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double mean = n1 * n2 / 2.0;
  const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (!(var > 0.0)) return 1.0;
  const double z = std::max(0.0, std::fabs(u - mean) - 0.5) / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

double mann_whitney_p(std::span<const double> a, std::span<const double> b) {
  if (a.size() + b.size() <= kExactLimit) return mann_whitney_exact(a, b);
  return mann_whitney_normal(a, b);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("spearman: need paired samples of size >= 2");
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

} // namespace fcpso::stats
