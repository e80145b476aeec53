#include "fmdraw/runner.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "fmdraw/audits.hpp"

namespace fmdraw {

namespace {

void tally(RunReport& rep, const StreamEvent& ev, const DrawingDelta& d) {
  EventReport e;
  e.u = ev.u;
  e.v = ev.v;
  e.singles = d.singles;
  e.bulks = d.bulks;
  e.max_bulk = d.max_bulk_size;
  e.placed = d.placed.size();
  e.moved = d.moved.size();
  rep.per_event.push_back(std::move(e));
  rep.singles += d.singles;
  rep.bulks += d.bulks;
  rep.max_bulk = std::max(rep.max_bulk, d.max_bulk_size);
}

void collect(RunReport& rep, std::vector<std::string> violations,
             std::size_t event_index) {
  for (auto& v : violations) {
    rep.audit_passed = false;
    rep.violations.push_back("event " + std::to_string(event_index) + ": " +
                             v);
  }
}

}  // namespace

RunOutcome run_stream(const Stream& s, Strategy strategy, LabelerConfig cfg,
                      bool audit_each) {
  RunOutcome out;
  out.report.mode = s.mode;
  out.report.strategy = strategy;
  auto t0 = std::chrono::steady_clock::now();

  switch (s.mode) {
    case StreamMode::tree:
      out.tree = std::make_unique<TreeDrawing>(strategy, cfg);
      break;
    case StreamMode::treemap:
      out.treemap = std::make_unique<TreemapDrawing>(strategy, cfg);
      break;
    case StreamMode::outerplanar:
      out.outer = std::make_unique<OuterplanarDrawing>(strategy, cfg);
      break;
  }

  std::uint64_t reseat_base = 0;
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const auto& ev = s.events[i];
    DrawingDelta d;
    try {
      if (out.tree) d = out.tree->insert_edge(ev.u, ev.v, ev.pos_u);
      else if (out.treemap)
        d = out.treemap->insert_edge(ev.u, ev.v, ev.pos_u);
      else
        d = out.outer->insert_edge(ev.u, ev.v, ev.pos_u, ev.pos_v, ev.hint);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "event " + std::to_string(i) + " (" + ev.u + "," + ev.v +
                      "): " + e.what());
    }
    tally(out.report, ev, d);
    if (out.outer) {
      std::uint64_t now = out.outer->total_moves();
      out.report.per_event.back().reseated = now - reseat_base;
      reseat_base = now;
    }
    if (audit_each) {
      if (out.tree) collect(out.report, audit_tree(*out.tree), i);
      else if (out.treemap)
        collect(out.report, audit_treemap(*out.treemap), i);
      else
        collect(out.report, audit_outerplanar(*out.outer), i);
    }
  }

  RunReport& rep = out.report;
  std::size_t last = s.events.empty() ? 0 : s.events.size() - 1;
  if (out.tree) {
    rep.n = out.tree->size();
    rep.area = out.tree->area();
    rep.max_label = out.tree->max_label();
    if (!audit_each) collect(rep, audit_tree(*out.tree), last);
  } else if (out.treemap) {
    rep.n = out.treemap->size();
    rep.area = out.treemap->area();
    rep.max_label =
        std::max(out.treemap->max_x_label(), out.treemap->max_y_label());
    if (!audit_each) collect(rep, audit_treemap(*out.treemap), last);
  } else {
    rep.n = out.outer->size();
    rep.area = out.outer->area();
    rep.max_label = out.outer->max_label();
    if (!audit_each) collect(rep, audit_outerplanar(*out.outer), last);
  }

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

std::string report_json(const RunReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["mode"] = mode_name(r.mode);
  j["strategy"] = strategy_name(r.strategy);
  j["n"] = r.n;
  auto& pe = j["per_event"] = nlohmann::json::array();
  for (const auto& e : r.per_event) {
    nlohmann::json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["singles"] = e.singles;
    je["bulks"] = e.bulks;
    je["max_bulk"] = e.max_bulk;
    je["placed"] = e.placed;
    je["moved"] = e.moved;
    je["reseated"] = e.reseated;
    pe.push_back(std::move(je));
  }
  j["totals"] = {{"singles", r.singles},
                 {"bulks", r.bulks},
                 {"max_bulk", r.max_bulk},
                 {"max_label", r.max_label},
                 {"area", r.area}};
  j["audit"] = {{"passed", r.audit_passed}, {"violations", r.violations}};
  return j.dump(2) + "\n";
}

}  // namespace fmdraw
