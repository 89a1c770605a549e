#include <doctest.h>

#include "fcpso/dominance.hpp"
#include "fcpso/indicators.hpp"
#include "fcpso/optimizer.hpp"

using namespace fcpso;

namespace {

RunConfig config(Variant v, std::size_t evaluations = 25000) {
  RunConfig cfg;
  cfg.dynamics = DynamicsConfig::defaults(v);
  cfg.max_evaluations = evaluations;
  return cfg;
}

} // namespace

TEST_SUITE("optimizer") {

TEST_CASE("fcpso reaches the zdt1 front") {
  const auto zdt1 = make_problem("zdt1");
  const auto r = run(zdt1, config(Variant::fcpso), 1);
  CHECK(r.evaluations_used == 25000);
  CHECK(r.generations == 249);
  CHECK(r.front.size() >= 90);
  CHECK(hypervolume(r.objective_front(), {2, 2}) >= 3.62);
}

TEST_CASE("degenerate budget gives the non-dominated initial swarm") {
  const auto zdt1 = make_problem("zdt1");
  const auto r = run(zdt1, config(Variant::smpso, 100), 3);
  CHECK(r.evaluations_used == 100);
  CHECK(r.generations == 0);
  Rng init = Rng::derive(3, {1});  // the optimizer's initialization stream
  const auto swarm = initialize_swarm(zdt1, config(Variant::smpso).dynamics, init);
  std::vector<std::vector<double>> objs;
  for (const auto& p : swarm) objs.push_back(p.objectives);
  auto expect = nondominated(objs);
  auto got = r.objective_front();
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
}

TEST_CASE("same seed gives identical results") {
  const auto dtlz2 = make_problem("dtlz2");
  for (Variant v : {Variant::smpso, Variant::em_smpso, Variant::fcpso}) {
    const auto a = run(dtlz2, config(v, 3000), 9);
    const auto b = run(dtlz2, config(v, 3000), 9);
    REQUIRE(a.front.size() == b.front.size());
    for (std::size_t i = 0; i < a.front.size(); ++i) {
      CHECK(a.front[i].position == b.front[i].position);
      CHECK(a.front[i].objectives == b.front[i].objectives);
    }
    const auto c = run(dtlz2, config(v, 3000), 10);
    CHECK(c.objective_front() != a.objective_front());
  }
}

TEST_CASE("property: evaluation accounting and archive invariants") {
  for (const char* name : {"zdt3", "dtlz1", "wfg4"}) {
    const auto p = make_problem(name, 0);
    for (std::size_t budget : {100u, 1050u, 2000u}) {
      RunConfig cfg = config(Variant::fcpso, budget);
      cfg.dynamics.swarm_size = 50;
      const auto r = run(p, cfg, 4);
      CHECK(r.evaluations_used == cfg.dynamics.swarm_size * (r.generations + 1));
      CHECK(r.evaluations_used <= budget);
      CHECK(r.evaluations_used + cfg.dynamics.swarm_size > budget);
      CHECK(r.front.size() <= cfg.archive_capacity);
      for (const auto& e : r.front) {
        CHECK(p.bounds.contains(e.position));
        CHECK(p.evaluate(e.position) == e.objectives);
        for (const auto& o : r.front) CHECK_FALSE(dominates(o.objectives, e.objectives));
      }
    }
  }
}

TEST_CASE("run_until_hv examples") {
  const auto zdt1 = make_problem("zdt1");
  const auto zero = run_until_hv(zdt1, config(Variant::smpso), 0.0, 2);
  CHECK(zero.target_reached);
  CHECK(zero.generations == 1);
  CHECK(zero.evaluations_used == 200);

  const auto tiny = run_until_hv(zdt1, config(Variant::smpso, 500), 1.0, 2);
  CHECK_FALSE(tiny.target_reached);
  CHECK(tiny.evaluations_used == 500);

  const auto reach = run_until_hv(zdt1, config(Variant::fcpso), 0.95, 2);
  CHECK(reach.target_reached);
  CHECK(reach.evaluations_used < 25000);
  CHECK(reach.hv_trace.back().second >= 0.95 * 11.0 / 3.0);

  ProblemInstance bare = zdt1;
  bare.reference_hv.reset();
  CHECK_THROWS_AS(run_until_hv(bare, config(Variant::fcpso), 0.95, 2), ConfigError);
}

TEST_CASE("property: hv trace rarely dips") {
  const auto zdt1 = make_problem("zdt1");
  RunConfig cfg = config(Variant::smpso, 10000);
  cfg.record_interval = 1;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto r = run(zdt1, cfg, seed);
    REQUIRE(r.hv_trace.size() == r.generations + 1);
    for (std::size_t i = 1; i < r.hv_trace.size(); ++i)
      CHECK(r.hv_trace[i].second >= 0.99 * r.hv_trace[i - 1].second);
  }
}

TEST_CASE("config validation") {
  RunConfig cfg = config(Variant::fcpso, 50);
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = config(Variant::fcpso);
  cfg.archive_capacity = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = config(Variant::fcpso);
  cfg.termination = Termination::hv_target;
  cfg.hv_target_fraction = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

}
