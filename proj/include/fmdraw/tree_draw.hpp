#pragma once

#include <list>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fmdraw/draw_delta.hpp"
#include "fmdraw/labeler_factory.hpp"
#include "fmdraw/order_core.hpp"

namespace fmdraw {

/// Streamed upward straight-line grid drawing of a tree. One labeler per
/// level; vertex v on level k sits at (L(v) + xoff[k], -k). Levels created
/// by root recalibration pin their offset so the old drawing never moves.
class TreeDrawing {
 public:
  explicit TreeDrawing(Strategy s, LabelerConfig cfg = {});

  /// Insert edge (a,b) with b as a's pos_a-th child. An empty drawing
  /// bootstraps a as the root. If a is unknown but b is the current root,
  /// the edge grows the tree upward (root recalibration).
  DrawingDelta insert_edge(const std::string& a, const std::string& b,
                           std::size_t pos_a);

  bool contains(const std::string& v) const { return verts_.count(v) > 0; }
  std::size_t size() const { return verts_.size(); }
  const std::string& root() const { return root_; }
  Point position(const std::string& v) const;
  int depth_of(const std::string& v) const;

  /// All edges as straight segments (parent to child), insertion order.
  std::vector<Segment> segments() const;
  /// Edge endpoints by name, aligned with segments().
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }
  /// Left-to-right vertex order of one level.
  std::vector<std::string> level_order(int depth) const;
  std::vector<int> levels() const;
  const std::vector<std::string>& children_of(const std::string& v) const;
  const std::string& parent_of(const std::string& v) const;
  std::vector<std::string> vertices() const;

  /// Bounding-box area, degenerate boxes clamped to width/height 1.
  long long area() const;

  /// Largest label in use across all level labelers.
  Label max_label() const;

 private:
  struct Level {
    std::unique_ptr<Labeler> labeler;
    LabelMap map;  // replica for resolving bulk ranges to vertices
    std::list<std::string> order;
    std::unordered_map<std::uint64_t, std::string> vert_of;
    long long xoff = 0;
  };
  struct Vertex {
    int depth = 0;
    ElementHandle handle;
    std::string parent;
    std::vector<std::string> children;
    std::list<std::string>::iterator level_pos;
  };

  Level& level(int depth);
  Point pos_of(const Vertex& v, const Level& lv) const;
  /// Apply relabel ops to the level replica, recording vertex moves.
  void realize(Level& lv, const std::vector<RelabelOp>& ops,
               DrawingDelta& delta);
  void place(const std::string& name, int depth, ElementHandle anchor,
             Side side, DrawingDelta& delta);

  Strategy strategy_;
  LabelerConfig cfg_;
  std::map<int, Level> levels_;
  std::unordered_map<std::string, Vertex> verts_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::string root_;
};

}  // namespace fmdraw
