#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fmdraw/stream.hpp"
#include "fmdraw/tree_draw.hpp"
#include "fmdraw/treemap_draw.hpp"

namespace fmdraw {

struct EventReport {
  std::string u;
  std::string v;
  std::uint64_t singles = 0;
  std::uint64_t bulks = 0;
  std::uint64_t max_bulk = 0;
  std::size_t placed = 0;
  std::size_t moved = 0;     // vertices at a new point (includes slot remaps)
  std::uint64_t reseated = 0;  // outerplanar re-seat moves charged this event
};

struct RunReport {
  StreamMode mode = StreamMode::tree;
  Strategy strategy = Strategy::oracle;
  std::size_t n = 0;  // vertices drawn
  std::vector<EventReport> per_event;
  std::uint64_t singles = 0;
  std::uint64_t bulks = 0;
  std::uint64_t max_bulk = 0;
  Label max_label = 0;
  long long area = 0;
  bool audit_passed = true;
  std::vector<std::string> violations;
  double wall_seconds = 0;  // never serialized; reports stay deterministic
};

/// A finished run: the report plus whichever drawing the mode produced.
struct RunOutcome {
  RunReport report;
  std::unique_ptr<TreeDrawing> tree;
  std::unique_ptr<TreemapDrawing> treemap;
  std::unique_ptr<OuterplanarDrawing> outer;
};

/// Replays the stream through the matching engine. The final drawing is
/// always audited; audit_each adds a full audit after every event. Engine
/// errors are rethrown with the offending event index prefixed.
RunOutcome run_stream(const Stream& s, Strategy strategy,
                      LabelerConfig cfg = {}, bool audit_each = false);

/// Versioned JSON serialization (schema 1), byte-stable for equal reports.
std::string report_json(const RunReport& r);

}  // namespace fmdraw
