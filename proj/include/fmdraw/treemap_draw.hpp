#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fmdraw/draw_delta.hpp"
#include "fmdraw/labeler_factory.hpp"
#include "fmdraw/order_core.hpp"

namespace fmdraw {

enum class AxisKind { x, y };

struct RectBounds {
  long long left = 0, right = 0, bottom = 0, top = 0;
};

/// Streamed tree-map: two global coordinate sets (one labeler per axis).
/// Rectangle boundaries are shared references into those sets; a null
/// boundary slot inherits the parent's boundary on that side, so a first
/// child occupies its parent exactly and costs no coordinates.
class TreemapDrawing {
 public:
  explicit TreemapDrawing(Strategy s, LabelerConfig cfg = {});

  /// Insert edge (a,b), b becoming a's pos_a-th child. An empty drawing
  /// bootstraps a as the root rectangle.
  DrawingDelta insert_edge(const std::string& a, const std::string& b,
                           std::size_t pos_a);

  bool contains(const std::string& v) const { return nodes_.count(v) > 0; }
  std::size_t size() const { return nodes_.size(); }
  const std::string& root() const { return root_; }

  RectBounds bounds_of(const std::string& v) const;
  /// All rectangles in insertion order as (vertex, bounds).
  std::vector<std::pair<std::string, RectBounds>> rectangles() const;
  const std::vector<std::string>& children_of(const std::string& v) const;
  AxisKind primary_axis(const std::string& v) const;

  Label max_x_label() const;
  Label max_y_label() const;
  long long area() const;

 private:
  struct Coord {
    AxisKind axis;
    ElementHandle handle;
  };
  using CoordRef = std::shared_ptr<Coord>;

  struct Node {
    std::string parent;
    std::vector<std::string> children;
    AxisKind primary = AxisKind::x;
    // left/right on X, bottom/top on Y; null = inherit from parent.
    CoordRef lo[2];
    CoordRef hi[2];
  };

  struct Axis {
    std::unique_ptr<Labeler> labeler;
    LabelMap map;  // replica, resolves bulk ranges and validates ops
  };

  Axis& axis(AxisKind k) { return axes_[static_cast<int>(k)]; }
  const Axis& axis(AxisKind k) const { return axes_[static_cast<int>(k)]; }

  Label resolve(const std::string& v, AxisKind k, bool high) const;
  ElementHandle resolve_handle(const std::string& v, AxisKind k,
                               bool high) const;
  CoordRef fresh(AxisKind k, ElementHandle anchor, Side side,
                 DrawingDelta& delta);
  void realize(AxisKind k, const std::vector<RelabelOp>& ops,
               DrawingDelta& delta);
  void make_root(const std::string& r, DrawingDelta& delta);

  Strategy strategy_;
  LabelerConfig cfg_;
  Axis axes_[2];
  std::unordered_map<std::string, Node> nodes_;
  std::vector<std::string> order_;  // insertion order
  std::string root_;
};

}  // namespace fmdraw
