// Command-line workbench: replay stream files through the drawing engines,
// render SVG snapshots, benchmark move counts over doubling n, and run the
// exponential-area adversary.

#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmdraw/adversary.hpp"
#include "fmdraw/runner.hpp"
#include "fmdraw/svg.hpp"
#include "fmdraw/workloads.hpp"

using namespace fmdraw;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data))
    throw Error(ErrorCode::parse_error, "cannot write " + path);
}

struct BenchRow {
  std::size_t n = 0;
  RunReport rep;
};

double loglog_slope(const std::vector<BenchRow>& rows) {
  // Least-squares slope of log2(moves) against log2(n).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    double x = std::log2(double(r.n));
    double y = std::log2(double(r.rep.singles + r.rep.bulks) + 1.0);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = double(rows.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int cmd_run(const std::string& in, Strategy strat, LabelerConfig cfg,
            bool audit, const std::string& out, const std::string& svg) {
  auto stream = parse_stream(slurp(in));
  auto outcome = run_stream(stream, strat, cfg, audit);
  spill(out, report_json(outcome.report));
  if (!svg.empty()) spill(svg, svg_of(outcome));
  std::cerr << "n=" << outcome.report.n << " singles="
            << outcome.report.singles << " bulks=" << outcome.report.bulks
            << " area=" << outcome.report.area << " audit="
            << (outcome.report.audit_passed ? "pass" : "FAIL") << " ("
            << outcome.report.wall_seconds << "s)\n";
  return outcome.report.audit_passed ? 0 : 2;
}

int cmd_draw(const std::string& in, Strategy strat, LabelerConfig cfg,
             bool audit, const std::string& out) {
  auto stream = parse_stream(slurp(in));
  auto outcome = run_stream(stream, strat, cfg, audit);
  spill(out, svg_of(outcome));
  if (!outcome.report.audit_passed) {
    for (const auto& v : outcome.report.violations)
      std::cerr << "audit: " << v << "\n";
    return 2;
  }
  return 0;
}

int cmd_bench(StreamMode mode, Strategy strat, LabelerConfig cfg,
              int min_exp, int max_exp, std::uint64_t seed,
              const std::string& out) {
  std::vector<std::future<BenchRow>> futs;
  for (int e = min_exp; e <= max_exp; ++e)
    futs.push_back(std::async(std::launch::async, [=] {
      std::size_t n = std::size_t{1} << e;
      auto stream = make_workload(mode, n, seed + std::uint64_t(e));
      auto outcome = run_stream(stream, strat, cfg, false);
      return BenchRow{n, std::move(outcome.report)};
    }));
  std::vector<BenchRow> rows;
  for (auto& f : futs) rows.push_back(f.get());

  std::cout << "mode=" << mode_name(mode) << " strategy="
            << strategy_name(strat) << "\n";
  std::cout << "        n    singles      bulks  moves/nlog  moves/nlog2  "
               "max_label/n\n";
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& r : rows) {
    double lg = std::log2(double(r.n));
    double moves = double(r.rep.singles + r.rep.bulks);
    std::printf("%9zu %10llu %10llu %11.3f %12.4f %12.2f\n", r.n,
                (unsigned long long)r.rep.singles,
                (unsigned long long)r.rep.bulks, moves / (double(r.n) * lg),
                moves / (double(r.n) * lg * lg),
                double(r.rep.max_label) / double(r.n));
    jrows.push_back({{"n", r.n},
                     {"singles", r.rep.singles},
                     {"bulks", r.rep.bulks},
                     {"max_bulk", r.rep.max_bulk},
                     {"max_label", r.rep.max_label},
                     {"area", r.rep.area}});
  }
  double slope = loglog_slope(rows);
  std::printf("log-log slope of total moves: %.3f\n", slope);
  if (!out.empty()) {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = "bench";
    j["mode"] = mode_name(mode);
    j["strategy"] = strategy_name(strat);
    j["seed"] = seed;
    j["rows"] = std::move(jrows);
    j["loglog_slope"] = slope;
    spill(out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_adversary(std::size_t rounds, std::size_t target_points,
                  const std::string& out) {
  GreedyBaseline greedy;
  AdversaryConfig cfg;
  cfg.phase1_rounds = rounds;
  cfg.phase2_target_points = target_points;
  AdversaryRun run(greedy, cfg);
  run.run();

  std::cout << "round  phase     log2(s)     points         area\n";
  nlohmann::json jrounds = nlohmann::json::array();
  std::size_t i = 0;
  for (const auto& r : run.rounds()) {
    double ls = std::log2(r.s.convert_to<double>());
    std::printf("%5zu %6d %11.2f %10zu %12lld\n", i++, r.phase, ls,
                r.points, r.area);
    jrounds.push_back({{"phase", r.phase},
                       {"s", r.s.str()},
                       {"points", r.points},
                       {"area", r.area}});
  }
  std::printf("edges=%zu switch_round=%zu final_area=%lld\n",
              run.edge_count(), run.switch_round(), run.area());
  if (!out.empty()) {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = "adversary";
    j["rounds"] = std::move(jrounds);
    j["switch_round"] = run.switch_round();
    j["edge_count"] = run.edge_count();
    j["final_area"] = run.area();
    spill(out, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streamed graph drawing workbench"};
  app.require_subcommand(1);

  std::string in = "-", out = "-", svg, strategy = "oracle", mode = "tree";
  int poly_exponent = 2, min_exp = 10, max_exp = 14;
  bool audit = false;
  std::uint64_t seed = 1;
  std::size_t rounds = 20, target_points = std::size_t{1} << 14;

  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", strategy,
                    "oracle|tag|packed|sqrt|twolevel|bulkpacked");
    sub->add_option("--poly-exponent", poly_exponent,
                    "tag label-space exponent");
  };

  auto* run = app.add_subcommand("run", "replay a stream, emit a report");
  run->add_option("input", in, "stream file ('-' for stdin)");
  add_strategy(run);
  run->add_flag("--audit", audit, "full audit after every event");
  run->add_option("--out", out, "report path ('-' for stdout)");
  run->add_option("--svg", svg, "also write an SVG snapshot here");

  auto* draw = app.add_subcommand("draw", "replay a stream, emit SVG");
  draw->add_option("input", in, "stream file ('-' for stdin)");
  add_strategy(draw);
  draw->add_flag("--audit", audit, "full audit after every event");
  draw->add_option("--out", out, "SVG path ('-' for stdout)");

  auto* bench = app.add_subcommand(
      "bench", "move-count curves over doubling n (runs in parallel)");
  bench->add_option("--mode", mode, "tree|treemap|outerplanar");
  add_strategy(bench);
  bench->add_option("--min-exp", min_exp, "smallest n as a power of two");
  bench->add_option("--max-exp", max_exp, "largest n as a power of two");
  bench->add_option("--seed", seed, "workload seed");
  bench->add_option("--out", out, "also write rows as JSON here");

  auto* adv = app.add_subcommand(
      "adversary", "force the greedy no-move baseline into exponential area");
  adv->add_option("--rounds", rounds, "phase-1 halving rounds");
  adv->add_option("--target-points", target_points,
                  "phase-2 cut-line point budget");
  adv->add_option("--out", out, "also write rounds as JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    LabelerConfig cfg;
    cfg.tag_exponent = poly_exponent;
    if (*run)
      return cmd_run(in, strategy_from_name(strategy), cfg, audit, out, svg);
    if (*draw)
      return cmd_draw(in, strategy_from_name(strategy), cfg, audit, out);
    if (*bench)
      return cmd_bench(mode_from_name(mode), strategy_from_name(strategy),
                       cfg, min_exp, max_exp, seed,
                       out == "-" ? std::string() : out);
    if (*adv)
      return cmd_adversary(rounds, target_points,
                           out == "-" ? std::string() : out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
