#pragma once

#include <string>
#include <vector>

#include "fmdraw/geometry.hpp"

namespace fmdraw {

/// One translated convex group of points (realization of a Bulk op).
struct BulkGroup {
  std::vector<Point> points;  // positions before the move
  long long dx = 0;
  long long dy = 0;
};

struct PlacedItem {
  std::string id;
  Point at;
};

struct MovedItem {
  std::string id;
  Point from;
  Point to;
};

/// What changed on screen after one stream event.
struct DrawingDelta {
  std::vector<PlacedItem> placed;
  std::vector<MovedItem> moved;
  std::vector<BulkGroup> bulk_groups;
  std::uint64_t singles = 0;  // underlying labeler op counts
  std::uint64_t bulks = 0;
  std::uint64_t max_bulk_size = 0;
};

}  // namespace fmdraw
