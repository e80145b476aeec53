#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "fmdraw/geometry.hpp"
#include "fmdraw/order_core.hpp"

namespace fmdraw {

using Rational = boost::multiprecision::cpp_rational;

/// A placement rule that never relocates placed vertices. Every edge of the
/// adversary's tree leaves the root (at the origin), so the drawing is fully
/// described by the child points in rotation (ccw angular) order.
///
/// place() receives the current children and the rotation index of the new
/// edge; it must return a fresh lattice point whose direction from the root
/// lies strictly inside the angular gap at that index.
class NoMoveStrategy {
 public:
  virtual ~NoMoveStrategy() = default;
  virtual Point place(const std::vector<Point>& children, std::size_t pos) = 0;
};

/// Picks the lattice point of minimum Euclidean distance to the root that
/// respects the rotation gap; ties prefer larger y, then smaller x. Searches
/// expanding rings, switching to a sweep along the gap's dominant axis when
/// the gap is too thin for nearby points.
class GreedyBaseline : public NoMoveStrategy {
 public:
  Point place(const std::vector<Point>& children, std::size_t pos) override;
};

/// Bounding-box area of a point set; degenerate spans count as 1.
long long area_of(const std::vector<Point>& pts);

struct AdversaryConfig {
  std::size_t phase1_rounds = 20;
  /// Phase 2 caps the wedge by the lowest lattice line with at least this
  /// many wedge points below it, then halves that count per round.
  std::size_t phase2_target_points = std::size_t{1} << 14;
};

struct AdversaryRound {
  int phase = 1;           // 1 = interval halving, 2 = lattice-point halving
  Rational s;              // wedge sub-interval on the bounding-square side
  std::size_t points = 0;  // remaining triangle lattice points (phase 2)
  long long area = 0;      // drawing bounding-box area after the round
};

/// Drives a no-move strategy through the exponential-area construction:
/// up to 5 root edges pin a wedge through one side of the 2x2 bounding
/// square, phase 1 halves the wedge's side interval once per round, then
/// phase 2 halves the lattice points of the wedge's low triangle until the
/// strategy is forced far from the root. All wedge arithmetic is exact.
class AdversaryRun {
 public:
  explicit AdversaryRun(NoMoveStrategy& strategy, AdversaryConfig cfg = {});

  void run();

  const std::vector<AdversaryRound>& rounds() const { return rounds_; }
  const Rational& s() const { return s_; }
  long long area() const;
  std::size_t switch_round() const { return switch_round_; }
  std::size_t edge_count() const { return children_.size(); }
  const std::vector<Point>& children() const { return children_; }

 private:
  Point next_inside();
  void setup();
  void phase1_round();
  void choose_cut_line();
  void phase2_round();
  std::size_t count_between(Point lo, Point hi) const;

  Point transformed(Point p) const;
  Rational param(Point p) const;

  NoMoveStrategy& strat_;
  AdversaryConfig cfg_;
  std::vector<Point> children_;  // rotation (ccw) order
  int side_ = 0;                 // 0 top, 1 right, 2 bottom, 3 left
  Point e_, f_;                  // wedge rays, param(e_) < param(f_)
  Rational s_ = 2;
  long long y_cap_ = 0;          // phase-2 cut line (transformed frame)
  std::size_t points_ = 0;       // wedge lattice points below the cut line
  std::size_t switch_round_ = 0;
  std::vector<AdversaryRound> rounds_;
};

}  // namespace fmdraw
