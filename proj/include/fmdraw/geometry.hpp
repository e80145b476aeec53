#pragma once

#include <cstdint>
#include <vector>

namespace fmdraw {

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point a, b;
};

/// Sign of the cross product (b-a) x (c-a). Exact with __int128.
int orientation(const Point& a, const Point& b, const Point& c);

bool on_segment(const Segment& s, const Point& p);

/// True when the segments share more than a common endpoint: a proper
/// crossing, a T-touch in a segment interior, or a collinear overlap.
bool segments_conflict(const Segment& s, const Segment& t);

struct PlanarityViolation {
  std::size_t first = 0;   // indices into the audited segment list
  std::size_t second = 0;
};

/// All conflicting pairs among the given segments. O(m^2), exact.
std::vector<PlanarityViolation> planarity_audit(
    const std::vector<Segment>& segs);

/// Conflicts between `changed` (indices into segs) and every other segment.
/// Sound and complete per event: a new conflict needs a changed segment.
std::vector<PlanarityViolation> planarity_audit_incremental(
    const std::vector<Segment>& segs, const std::vector<std::size_t>& changed);

}  // namespace fmdraw
