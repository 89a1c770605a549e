#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fcpso/dominance.hpp"
#include "fcpso/indicators.hpp"
#include "fcpso/problems.hpp"
#include "fcpso/rng.hpp"

using namespace fcpso;
using doctest::Approx;

namespace {

// Random mutually non-dominated points near the unit simplex.
PointSet random_front(Rng& rng, std::size_t k, std::size_t n) {
  PointSet pts;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> p(k);
    double s = 0.0;
    for (auto& v : p) {
      v = rng.uniform() + 1e-3;
      s += v;
    }
    for (auto& v : p) v = v / s + 0.05 * rng.uniform();
    pts.push_back(p);
  }
  return nondominated(pts);
}

} // namespace

TEST_SUITE("indicators") {

TEST_CASE("hypervolume examples") {
  const PointSet f{{0, 1}, {0.25, 0.5}, {1, 0}};
  CHECK(hypervolume(f, {2, 2}) == Approx(3.375).epsilon(1e-15));
  CHECK(hypervolume_slicing(f, {2, 2}) == Approx(3.375).epsilon(1e-15));
  CHECK(hypervolume({{2, 2}}, {2, 2}) == 0.0);
  CHECK(hypervolume({}, {2, 2}) == 0.0);
  // points outside the reference box are ignored
  CHECK(hypervolume({{0, 1}, {3, -1}}, {2, 2}) == Approx(2.0));
  CHECK(hypervolume({{0.5, 0.5, 0.5}}, {1, 1, 1}) == Approx(0.125));
}

TEST_CASE("hypervolume of the zdt fronts") {
  const auto z1 = make_problem("zdt1");
  CHECK(hypervolume(*reference_front("zdt1", 2, 100000), {2, 2}) == Approx(11.0 / 3.0).epsilon(1e-4));
  CHECK(hypervolume(*reference_front("zdt2", 2, 100000), {2, 2}) == Approx(10.0 / 3.0).epsilon(1e-4));
  CHECK(z1.reference_hv.value() == Approx(3.66).epsilon(0.01));
}

TEST_CASE("igd examples") {
  const PointSet ref{{0, 1}, {1, 0}};
  CHECK(igd(ref, ref) == 0.0);
  CHECK(igd({{0.1, 1}, {1, 0.1}}, ref) == Approx(0.1));
  CHECK(igd({{1, 0.1}, {0.1, 1}}, {{1, 0}, {0, 1}}) == Approx(0.1));
  CHECK_THROWS_AS(igd({}, ref), std::invalid_argument);
  CHECK_THROWS_AS(igd(ref, {}), std::invalid_argument);
}

TEST_CASE("additive_epsilon examples") {
  const PointSet ref{{0, 1}, {0.5, 0.5}, {1, 0}};
  CHECK(additive_epsilon(ref, ref) == 0.0);
  PointSet shifted = ref;
  for (auto& p : shifted)
    for (auto& v : p) v += 0.2;
  CHECK(additive_epsilon(shifted, ref) == Approx(0.2));
  CHECK(additive_epsilon(ref, ref) >= 0.0);
  CHECK_THROWS_AS(additive_epsilon({}, ref), std::invalid_argument);
}

TEST_CASE("spacing examples") {
  CHECK(spacing({{0, 1}, {1, 0}}) == 0.0);
  CHECK(spacing({{0, 0}, {1, 1}, {2, 2}, {3, 3}}) == Approx(0.0));
  CHECK(spacing({{0, 0}, {0, 1}, {0, 3}}) == Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(spacing({{0, 0}}), std::invalid_argument);
}

TEST_CASE("property: sweep and slicer agree on 2-D fronts") {
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_front(rng, 2, 5 + t);
    CHECK(std::abs(hypervolume_sweep_2d(f, {1.5, 1.5}) - hypervolume_slicing(f, {1.5, 1.5})) <= 1e-9);
  }
}

TEST_CASE("property: exact hypervolume matches a hit-ratio estimate") {
  Rng rng(62);
  for (std::size_t k : {3u, 4u, 5u}) {
    const auto f = random_front(rng, k, 30);
    const std::vector<double> ref(k, 1.2);
    const double exact = hypervolume(f, ref);
    const int samples = 1000000;
    int hits = 0;
    std::vector<double> z(k);
    for (int s = 0; s < samples; ++s) {
      for (auto& v : z) v = rng.uniform(0.0, 1.2);
      for (const auto& p : f) {
        bool dom = true;
        for (std::size_t j = 0; j < k && dom; ++j) dom = p[j] <= z[j];
        if (dom) {
          ++hits;
          break;
        }
      }
    }
    const double box = std::pow(1.2, static_cast<double>(k));
    const double ratio = static_cast<double>(hits) / samples;
    const double se = box * std::sqrt(ratio * (1 - ratio) / samples);
    CHECK(std::abs(ratio * box - exact) <= 4.0 * se);
  }
}

TEST_CASE("property: adding a point never decreases hypervolume") {
  Rng rng(63);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 2 + t % 3;
    auto f = random_front(rng, k, 10);
    const std::vector<double> ref(k, 1.5);
    const double before = hypervolume(f, ref);
    std::vector<double> extra(k);
    for (auto& v : extra) v = rng.uniform(0.0, 1.0);
    f.push_back(extra);
    CHECK(hypervolume(f, ref) >= before - 1e-12);
  }
}

TEST_CASE("property: igd is permutation invariant and zero only on coverage") {
  Rng rng(64);
  auto f = random_front(rng, 3, 40);
  auto r = random_front(rng, 3, 40);
  const double base = igd(f, r);
  std::reverse(f.begin(), f.end());
  std::rotate(r.begin(), r.begin() + 7, r.end());
  CHECK(igd(f, r) == Approx(base).epsilon(1e-14));
  auto superset = f;
  superset.insert(superset.end(), r.begin(), r.end());
  CHECK(igd(superset, r) <= 1e-12);
  CHECK(igd(f, r) > 0.0);
}

TEST_CASE("property: epsilon shifts with the front") {
  Rng rng(65);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_front(rng, 3, 20);
    const auto r = random_front(rng, 3, 20);
    const double c = rng.uniform(-0.5, 0.5);
    auto g = f;
    for (auto& p : g)
      for (auto& v : p) v += c;
    CHECK(additive_epsilon(g, r) == Approx(additive_epsilon(f, r) + c).epsilon(1e-12));
  }
}

}
