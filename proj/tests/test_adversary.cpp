#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fmdraw/adversary.hpp"

using namespace fmdraw;

TEST_CASE("area_of: degenerate boxes count as 1x1 spans") {
  CHECK(area_of({}) == 0);
  CHECK(area_of({Point{5, -3}}) == 1);
  CHECK(area_of({Point{0, 0}, Point{3, 4}}) == 12);
  CHECK(area_of({Point{0, 0}, Point{7, 0}}) == 7);  // flat box, height 1
}

TEST_CASE("greedy baseline: first child lands on (0,1)") {
  GreedyBaseline g;
  CHECK(g.place({}, 0) == Point{0, 1});
}

TEST_CASE("greedy baseline: respects the rotation gap") {
  GreedyBaseline g;
  std::vector<Point> children = {Point{0, 1}};
  // Second child appended after (0,1): anywhere but that ray.
  Point p = g.place(children, 1);
  CHECK(!(p.x == 0 && p.y >= 1));
  children.push_back(p);

  // A thin wedge between directions 1000/998 and 1000/999: the nearest
  // strictly interior lattice point sits hundreds of units out.
  std::vector<Point> wedge = {Point{1000, 998}, Point{1000, 999}};
  Point q = g.place(wedge, 1);
  auto cross = [](Point a, Point b) {
    return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
  };
  CHECK(cross(wedge[0], q) > 0);
  CHECK(cross(q, wedge[1]) > 0);
  CHECK(q.x * q.x + q.y * q.y > 64 * 64);
}

TEST_CASE("adversary forces the greedy baseline into exponential area") {
  GreedyBaseline greedy;
  AdversaryConfig cfg;
  cfg.phase1_rounds = 20;
  AdversaryRun run(greedy, cfg);
  run.run();

  // Phase 1: the side interval halves every round, exactly.
  CHECK(run.s() <= Rational(1, 1 << 19));
  const auto& rounds = run.rounds();
  REQUIRE(run.switch_round() == 20);
  Rational prev = 2;
  for (std::size_t i = 0; i < run.switch_round(); ++i) {
    CHECK(rounds[i].phase == 1);
    CHECK(rounds[i].s * 2 <= prev);
    prev = rounds[i].s;
  }

  // Phase 2: remaining lattice points at least halve every round.
  std::size_t phase2 = rounds.size() - run.switch_round();
  CHECK(phase2 >= 5);
  std::size_t prev_pts = rounds[run.switch_round()].points * 2 + 1;
  for (std::size_t i = run.switch_round(); i + 1 < rounds.size(); ++i) {
    CHECK(rounds[i].phase == 2);
    CHECK(rounds[i].points * 2 <= prev_pts);
    prev_pts = rounds[i].points;
  }
  CHECK(rounds.back().points == 0);

  // Area keeps growing through phase 2, by >= 0.5 doublings per round on
  // average, and never shrinks.
  double a0 = std::log2(double(rounds[run.switch_round() - 1].area));
  double a1 = std::log2(double(rounds.back().area));
  CHECK((a1 - a0) / double(phase2) >= 0.5);
  for (std::size_t i = run.switch_round(); i + 1 < rounds.size(); ++i)
    CHECK(rounds[i].area <= rounds[i + 1].area);

  // The whole tree is still a star with few edges.
  CHECK(run.edge_count() <= 5 + 20 + phase2);
}
