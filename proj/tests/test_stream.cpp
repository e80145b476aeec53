#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>

#include "fmdraw/runner.hpp"
#include "fmdraw/svg.hpp"
#include "fmdraw/workloads.hpp"

using namespace fmdraw;

namespace {

const char* kFig4 =
    "# chain with a pendant fan, then the long closing edge\n"
    "mode outerplanar\n"
    "edge a c 0 0\n"
    "edge c d 0 0\n"
    "edge i c 0 1\n"
    "edge i d 0 0\n"
    "edge d e 0 0\n"
    "edge e f 0 0\n"
    "edge f g 0 0\n"
    "edge g h 0 0\n"
    "edge h f 0 1\n"
    "edge a b 0 0\n"
    "edge a g 1 0\n";

std::string code_of(const std::string& text) {
  try {
    parse_stream(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    return e.what();
  }
  return "";
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("stream parsing") {
  auto s = parse_stream("mode tree\nedge r a 0 0");
  CHECK(s.mode == StreamMode::tree);
  REQUIRE(s.events.size() == 1);
  CHECK(s.events[0].u == "r");
  CHECK(s.events[0].v == "a");
  CHECK(!s.events[0].hint);

  auto o = parse_stream("mode outerplanar\nedge a c 1 0 hint b left");
  REQUIRE(o.events.size() == 1);
  CHECK(o.events[0].pos_u == 1);
  REQUIRE(o.events[0].hint);
  CHECK(o.events[0].hint->ref == "b");
  CHECK(o.events[0].hint->left);

  CHECK(parse_stream("mode treemap\n # nothing \n\n").events.empty());
}

TEST_CASE("stream parse errors carry line numbers") {
  CHECK(code_of("edge a").find("line 1") != std::string::npos);
  CHECK(code_of("edge a").find("missing fields") != std::string::npos);
  CHECK(code_of("mode tree\nmode tree").find("line 2") != std::string::npos);
  CHECK(code_of("mode lattice").find("unknown mode") != std::string::npos);
  CHECK(code_of("mode tree\nedge a b x 0").find("pos_u") !=
        std::string::npos);
  CHECK(code_of("mode tree\nedge a b 0 0 hint c left")
            .find("outerplanar") != std::string::npos);
  CHECK(code_of("mode outerplanar\nedge a b 0 0 hint c up")
            .find("left or right") != std::string::npos);
  CHECK(code_of("mode tree\nvertex a").find("unknown directive") !=
        std::string::npos);
  CHECK(code_of("").find("missing mode") != std::string::npos);
  CHECK(code_of("mode tree\nedge a b 0 0\nedge c\n").find("line 3") !=
        std::string::npos);
}

TEST_CASE("format_stream round-trips") {
  auto s = parse_stream(kFig4);
  s.events[2].hint = SideHint{"", false};
  auto again = parse_stream(format_stream(s));
  REQUIRE(again.events.size() == s.events.size());
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    CHECK(again.events[i].u == s.events[i].u);
    CHECK(again.events[i].v == s.events[i].v);
    CHECK(again.events[i].pos_u == s.events[i].pos_u);
    CHECK(again.events[i].pos_v == s.events[i].pos_v);
    CHECK(again.events[i].hint.has_value() == s.events[i].hint.has_value());
  }
  CHECK(!again.events[2].hint->left);
  CHECK(again.events[2].hint->ref.empty());
}

TEST_CASE("fan stream report: audit passes, four movers on the last event") {
  auto outcome = run_stream(parse_stream(kFig4), Strategy::oracle, {}, true);
  const auto& rep = outcome.report;
  CHECK(rep.audit_passed);
  CHECK(rep.violations.empty());
  CHECK(rep.n == 9);
  REQUIRE(rep.per_event.size() == 11);
  CHECK(rep.per_event.back().u == "a");
  CHECK(rep.per_event.back().v == "g");
  CHECK(rep.per_event.back().reseated == 4);
  CHECK(rep.per_event.back().moved >= 4);
  for (std::size_t i = 0; i + 1 < rep.per_event.size(); ++i)
    CHECK(rep.per_event[i].reseated == 0);
}

TEST_CASE("engine errors carry the event index") {
  try {
    run_stream(parse_stream("mode tree\nedge a b 0 0\nedge x y 0 0"),
               Strategy::oracle);
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::disconnected_stream);
    CHECK(std::string(e.what()).find("event 1 (x,y)") != std::string::npos);
  }
}

TEST_CASE("cross-strategy runs agree on the final tree layout order") {
  auto stream = make_workload(StreamMode::tree, 400, 7);
  auto a = run_stream(stream, Strategy::oracle);
  auto b = run_stream(stream, Strategy::sqrt_chunks);
  auto c = run_stream(stream, Strategy::bulk_packed);
  REQUIRE(a.report.audit_passed);
  for (int depth : a.tree->levels()) {
    CHECK(a.tree->level_order(depth) == b.tree->level_order(depth));
    CHECK(a.tree->level_order(depth) == c.tree->level_order(depth));
  }
}

TEST_CASE("triangle SVG has three lines; reports and SVG are byte-stable") {
  const char* tri =
      "mode outerplanar\nedge a c 0 0\nedge c b 1 0\nedge b a 1 1 hint - "
      "left\n";
  auto one = run_stream(parse_stream(tri), Strategy::packed, {}, true);
  auto two = run_stream(parse_stream(tri), Strategy::packed, {}, true);
  auto svg = svg_of(one);
  CHECK(count_of(svg, "<line ") == 3);
  CHECK(count_of(svg, "<circle ") == 3);
  CHECK(svg == svg_of(two));
  CHECK(report_json(one.report) == report_json(two.report));
  CHECK(one.report.wall_seconds >= 0);  // measured, but kept out of the bytes

  auto ws = make_workload(StreamMode::outerplanar, 60, 3);
  CHECK(svg_of(run_stream(ws, Strategy::packed)) ==
        svg_of(run_stream(ws, Strategy::packed)));
}

TEST_CASE("treemap SVG round-trip: re-parsed rectangles still nest") {
  auto outcome =
      run_stream(make_workload(StreamMode::treemap, 80, 5), Strategy::tag);
  REQUIRE(outcome.report.audit_passed);
  auto svg = svg_of(outcome);

  struct R {
    long long x, y, w, h;
  };
  std::vector<R> rects;
  std::size_t at = 0;
  while ((at = svg.find("<rect ", at)) != std::string::npos) {
    R r;
    REQUIRE(std::sscanf(svg.c_str() + at,
                        "<rect x=\"%lld\" y=\"%lld\" width=\"%lld\" "
                        "height=\"%lld\"",
                        &r.x, &r.y, &r.w, &r.h) == 4);
    rects.push_back(r);
    ++at;
  }
  REQUIRE(rects.size() == outcome.report.n);

  // Any two rectangles either nest or have disjoint interiors.
  for (std::size_t i = 0; i < rects.size(); ++i)
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      const R& a = rects[i];
      const R& b = rects[j];
      bool a_in_b = a.x >= b.x && a.y >= b.y && a.x + a.w <= b.x + b.w &&
                    a.y + a.h <= b.y + b.h;
      bool b_in_a = b.x >= a.x && b.y >= a.y && b.x + b.w <= a.x + a.w &&
                    b.y + b.h <= a.y + a.h;
      bool disjoint = a.x + a.w <= b.x || b.x + b.w <= a.x ||
                      a.y + a.h <= b.y || b.y + b.h <= a.y;
      CHECK((a_in_b || b_in_a || disjoint));
    }
}

TEST_CASE("workloads replay cleanly under every engine") {
  for (auto mode :
       {StreamMode::tree, StreamMode::treemap, StreamMode::outerplanar}) {
    auto s = make_workload(mode, 150, 42);
    auto strat = mode == StreamMode::outerplanar ? Strategy::bulk_packed
                                                 : Strategy::twolevel;
    auto outcome = run_stream(s, strat, {}, false);
    CHECK(outcome.report.audit_passed);
    CHECK(outcome.report.n >= 150);
    // The generated text form replays identically.
    auto reparsed = run_stream(parse_stream(format_stream(s)), strat);
    CHECK(report_json(reparsed.report) == report_json(outcome.report));
  }
}
