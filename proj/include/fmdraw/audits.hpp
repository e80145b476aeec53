#pragma once

#include <string>
#include <vector>

#include "fmdraw/outerplanar_draw.hpp"
#include "fmdraw/tree_draw.hpp"
#include "fmdraw/treemap_draw.hpp"

namespace fmdraw {

/// Planarity, upwardness and sibling-order checks. Empty = clean.
std::vector<std::string> audit_tree(const TreeDrawing& d);

/// Containment, sibling disjointness and rotation-order checks.
std::vector<std::string> audit_treemap(const TreemapDrawing& d);

/// Planarity, outer-face reachability, walk multiplicity and convex-position
/// checks.
std::vector<std::string> audit_outerplanar(const OuterplanarDrawing& d);

}  // namespace fmdraw
