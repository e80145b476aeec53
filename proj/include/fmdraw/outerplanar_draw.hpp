#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fmdraw/convex_slots.hpp"
#include "fmdraw/draw_delta.hpp"
#include "fmdraw/labeler_factory.hpp"
#include "fmdraw/order_core.hpp"
#include "fmdraw/rotation_graph.hpp"

namespace fmdraw {

/// Disambiguates a cycle-closing edge when the rotation system allows both
/// sides: `left` keeps the face traversed p->q as the outer face.
struct SideHint {
  std::string ref;
  bool left = true;
};

/// Streamed straight-line drawing of an outerplanar graph on grid slots in
/// convex position. A labeler orders vertices over slot indices; vertices
/// bypassed by an inserted edge are re-seated between their new outer-walk
/// neighbors (at most deg(v)-1 times each, Lemma 4 style).
///
/// Vertex re-seating needs labeler erase support, so only the oracle and
/// packed strategies qualify.
class OuterplanarDrawing {
 public:
  explicit OuterplanarDrawing(Strategy s, LabelerConfig cfg = {});

  DrawingDelta insert_edge(const std::string& p, const std::string& q,
                           std::size_t pos_p, std::size_t pos_q,
                           std::optional<SideHint> hint = std::nullopt);

  bool contains(const std::string& v) const { return verts_.count(v) > 0; }
  std::size_t size() const { return verts_.size(); }
  Point position(const std::string& v) const;
  std::vector<Segment> segments() const;
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }

  /// Vertices in circular (slot label) order.
  std::vector<std::string> circle_order() const;
  /// Current outer face walk as a vertex sequence.
  std::vector<std::string> outer_walk() const;
  const RotationGraph& graph() const { return rot_; }
  std::size_t degree(const std::string& v) const { return rot_.degree(v); }

  /// Completed re-seating moves per vertex.
  std::uint64_t moves_of(const std::string& v) const;
  std::uint64_t total_moves() const;

  Label max_label() const;

  std::size_t slot_count() const { return slots_.size(); }
  const std::vector<Point>& slots() const { return slots_; }
  long long area() const;

 private:
  struct Vert {
    ElementHandle handle;
    Corner anchor;
  };

  void apply_ops(const std::vector<RelabelOp>& ops, DrawingDelta& delta);
  void ensure_slots();
  ElementHandle seat_after(ElementHandle prev, const std::string& v,
                           DrawingDelta& delta);
  const FaceWalk& choose_outer(const std::vector<FaceWalk>& candidates,
                               const std::string& p, const std::string& q,
                               const std::optional<SideHint>& hint) const;

  RotationGraph rot_;
  std::unique_ptr<Labeler> lab_;
  LabelMap map_;
  std::unordered_map<std::uint64_t, std::string> vert_of_;
  std::unordered_map<std::string, Vert> verts_;
  std::unordered_map<std::string, std::uint64_t> moves_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::vector<Point> slots_;
};

}  // namespace fmdraw
