#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fcpso/archive.hpp"
#include "fcpso/rng.hpp"

using namespace fcpso;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ArchiveEntry entry(std::vector<double> f) { return ArchiveEntry{{0.0}, std::move(f)}; }

bool mutually_nondominated(const ExternalArchive& a) {
  for (const auto& x : a.entries())
    for (const auto& y : a.entries())
      if (&x != &y && (dominates(x.objectives, y.objectives) || x.objectives == y.objectives)) return false;
  return true;
}

} // namespace

TEST_SUITE("archive") {

TEST_CASE("dominates examples") {
  const std::vector<double> a{1, 2}, b{2, 3}, c{1, 3}, d{3, 1};
  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
  CHECK_FALSE(dominates(c, d));
  CHECK_FALSE(dominates(d, c));
  CHECK_FALSE(dominates(a, a));
  CHECK(dominates(std::vector<double>{1, 2}, std::vector<double>{1, 3}));
  CHECK_THROWS_AS(dominates(a, std::vector<double>{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("nondominated filter") {
  const auto nd = nondominated({{1, 3}, {2, 2}, {3, 3}, {3, 1}, {2, 2}});
  CHECK(nd.size() == 3);
}

TEST_CASE("try_insert examples") {
  ExternalArchive a(10);
  CHECK(a.try_insert(entry({1, 0})) == InsertOutcome::inserted);
  CHECK(a.try_insert(entry({0, 1})) == InsertOutcome::inserted);
  CHECK(a.try_insert(entry({0.5, 0.5})) == InsertOutcome::inserted);
  CHECK(a.size() == 3);

  ExternalArchive b(10);
  b.try_insert(entry({1, 1}));
  CHECK(b.try_insert(entry({2, 2})) == InsertOutcome::dominated);
  CHECK(b.size() == 1);
  CHECK(b.entries()[0].objectives == std::vector<double>{1, 1});
  CHECK(b.try_insert(entry({1, 1})) == InsertOutcome::dominated);
  CHECK(b.try_insert(entry({0.5, 0.5})) == InsertOutcome::inserted);
  CHECK(b.size() == 1);

  ExternalArchive c(2);
  c.try_insert(entry({0, 1}));
  c.try_insert(entry({1, 0}));
  CHECK(c.try_insert(entry({0.5, 0.5})) == InsertOutcome::replaced_crowded);
  REQUIRE(c.size() == 2);
  // both extremes keep infinite crowding and survive
  const auto f = c.objective_front();
  CHECK(std::find(f.begin(), f.end(), std::vector<double>{0, 1}) != f.end());
  CHECK(std::find(f.begin(), f.end(), std::vector<double>{1, 0}) != f.end());
}

TEST_CASE("crowding_distance examples") {
  const auto d = crowding_distance({{0, 1}, {0.5, 0.5}, {1, 0}});
  CHECK(d[0] == kInf);
  CHECK(d[1] == doctest::Approx(2.0));
  CHECK(d[2] == kInf);
  CHECK(crowding_distance({{3, 4}})[0] == kInf);
  const auto two = crowding_distance({{3, 4}, {4, 3}});
  CHECK(two[0] == kInf);
  CHECK(two[1] == kInf);
  // zero spread in the second objective contributes nothing
  const auto flat = crowding_distance({{0, 1}, {0.25, 1}, {1, 1}});
  CHECK(flat[1] == doctest::Approx(1.0));
}

TEST_CASE("select_leader examples") {
  Rng rng(4);
  ExternalArchive one(5);
  one.try_insert(entry({1, 1}));
  one.refresh_crowding();
  CHECK(one.select_leader(rng).objectives == std::vector<double>{1, 1});

  ExternalArchive empty(5);
  CHECK_THROWS_AS(empty.select_leader(rng), std::logic_error);

  ExternalArchive ten(20);
  for (int i = 0; i < 10; ++i) ten.try_insert(entry({i / 9.0, 1.0 - std::sqrt(i / 9.0)}));
  ten.refresh_crowding();
  std::vector<int> hits(10, 0);
  for (int t = 0; t < 10000; ++t) {
    const auto& e = ten.select_leader(rng);
    for (int i = 0; i < 10; ++i)
      if (&e == &ten.entries()[i]) ++hits[i];
  }
  int boundary = 0, interior = 0;
  for (int i = 0; i < 10; ++i) {
    if (std::isinf(ten.entries()[i].crowding)) boundary += hits[i];
    else interior = std::max(interior, hits[i]);
  }
  // each boundary entry wins every tournament it enters
  CHECK(boundary / 2 > interior);
}

TEST_CASE("tournament prefers infinite crowding") {
  Rng rng(8);
  ExternalArchive a(5);
  a.try_insert(entry({0, 1}));
  a.try_insert(entry({0.4, 0.5}));
  a.try_insert(entry({1, 0}));
  a.refresh_crowding();
  for (int t = 0; t < 200; ++t) CHECK(std::isinf(a.select_leader(rng).crowding));
}

TEST_CASE("property: fuzzed inserts keep the archive a bounded non-dominated set") {
  Rng rng(41);
  for (std::size_t k : {2u, 3u, 5u, 10u}) {
    ExternalArchive a(50);
    for (int t = 0; t < 2500; ++t) {
      std::vector<double> f(k);
      double s = 0;
      for (auto& v : f) {
        v = rng.uniform();
        s += v;
      }
      for (auto& v : f) v = v / s + 0.2 * rng.uniform();  // points near a simplex
      a.try_insert(entry(f));
      CHECK(a.size() <= a.capacity());
    }
    CHECK(mutually_nondominated(a));
  }
}

TEST_CASE("property: unbounded archive equals the brute-force non-dominated set") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    ExternalArchive a(100000);
    std::vector<std::vector<double>> offered;
    for (int t = 0; t < 200; ++t) {
      std::vector<double> f{rng.uniform(), rng.uniform(), rng.uniform()};
      offered.push_back(f);
      a.try_insert(entry(f));
    }
    auto expect = nondominated(offered);
    auto got = a.objective_front();
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("property: boundary entries have infinite crowding") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 3 + trial % 10; ++i) pts.push_back({rng.uniform(), rng.uniform(), rng.uniform()});
    const auto d = crowding_distance(pts);
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t lo = 0, hi = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i][j] < pts[lo][j]) lo = i;
        if (pts[i][j] > pts[hi][j]) hi = i;
      }
      CHECK(std::isinf(d[lo]));
      CHECK(std::isinf(d[hi]));
    }
  }
}

}
