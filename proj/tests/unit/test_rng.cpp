#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fcpso/rng.hpp"

using fcpso::Rng;

TEST_SUITE("rng") {

TEST_CASE("same seed, same stream") {
  Rng a(77), b(77);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("derived streams depend only on their path") {
  Rng a = Rng::derive(1, {2, 3});
  Rng b = Rng::derive(1, {2, 3});
  Rng c = Rng::derive(1, {3, 2});
  Rng d = Rng::derive(2, {2, 3});
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
}

TEST_CASE("uniform range and index") {
  Rng r(5);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
  std::set<std::size_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto k = r.index(7);
    CHECK(k < 7);
    seen.insert(k);
  }
  CHECK(seen.size() == 7);
  CHECK_THROWS_AS(r.index(0), std::invalid_argument);
}

}
