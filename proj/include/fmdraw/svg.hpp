#pragma once

#include <string>

#include "fmdraw/runner.hpp"

namespace fmdraw {

/// Deterministic SVG 1.1 snapshots: equal drawings serialize to equal
/// bytes. Vertices are emitted in sorted name order, edges and rectangles
/// in insertion order; the y axis is flipped so "up" renders up.
std::string svg_of(const TreeDrawing& d);
std::string svg_of(const TreemapDrawing& d);
std::string svg_of(const OuterplanarDrawing& d);
std::string svg_of(const RunOutcome& o);

}  // namespace fmdraw
