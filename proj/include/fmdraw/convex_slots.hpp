#pragma once

#include <cstddef>
#include <vector>

#include "fmdraw/geometry.hpp"

namespace fmdraw {

/// m lattice points in strictly convex, approximately circular position:
/// primitive vectors sorted by angle and prefix-summed into a convex chain.
/// Bounding-box area is O(m^3).
std::vector<Point> convex_grid_points(std::size_t m);

/// True when all consecutive turns share the same strict orientation.
bool strictly_convex(const std::vector<Point>& pts);

}  // namespace fmdraw
