#pragma once

#include <vector>

#include "fmdraw/move_plan.hpp"
#include "fmdraw/order_core.hpp"

namespace fmdraw {

/// Packed-array file maintenance: N = 4*n_cap slots, implicit window
/// hierarchy over leaf windows, density thresholds interpolated from 1.0 at
/// the leaves down to 0.5 at the root. Rebalance = even re-spread of the
/// smallest non-overfull enclosing window.
///
/// With `bulk_runs` enabled the re-spreads keep elements grouped in
/// contiguous runs of at most B = ceil(log2(n_cap)) and all moves are
/// emitted as Bulk ops of at most B elements; otherwise every move is a
/// Single.
class PackedArrayLabeler : public Labeler {
 public:
  explicit PackedArrayLabeler(bool bulk_runs = false,
                              std::size_t initial_n_cap = 16);

  InsertResult insert(ElementHandle anchor, Side side) override;
  Label label_of(ElementHandle h) const override { return map_.label_of(h); }
  std::size_t size() const override { return map_.size(); }
  Label label_space() const override { return space_; }
  Label bulk_limit() const override { return bulk_runs_ ? bulk_b_ : 0; }

  bool supports_erase() const override { return true; }
  std::vector<RelabelOp> erase(ElementHandle h) override;

  const LabelMap& state() const { return map_; }
  Label leaf_size() const { return leaf_; }
  int height() const { return height_; }
  /// Density threshold of a window at the given height (leaf = 0).
  double threshold(int h) const;
  /// Element capacity of a window at the given height.
  std::uint64_t window_cap(int h) const;
  /// Live-element count of the window at `height` containing `label`.
  std::uint64_t window_count(Label label, int h) const;

 private:
  void recompute_geometry();
  void grow(std::vector<RelabelOp>& out);
  /// Re-spread window [wlo, wlo+wsize): run layout when bulk_runs_, even
  /// spread otherwise. insert_rank < 0 means no reservation; otherwise the
  /// returned label is reserved for a new element at that rank.
  Label respread(Label wlo, Label wsize, long insert_rank,
                 std::vector<RelabelOp>& out);
  void fixup(Label label, std::vector<RelabelOp>& out);
  /// Rebalance around the freshly placed element, then normalize the result
  /// for replay: `assigned` becomes the element's final label and Single ops
  /// naming it are dropped (a replayer places it only after the relabels).
  void settle(InsertResult& res);
  /// plan_moves + apply to map_ + Fenwick upkeep, appending ops to out.
  void apply_moves(const std::vector<PlannedMove>& moves,
                   std::vector<RelabelOp>& out);

  // Fenwick tree over leaf windows.
  void fen_add(Label leaf, int delta);
  std::uint64_t fen_prefix(Label leaf_end) const;  // count of leaves < leaf_end

  bool bulk_runs_;
  std::size_t n_cap_;
  Label space_ = 0;  // N
  Label leaf_ = 0;
  int height_ = 0;  // number of window levels above a leaf
  Label bulk_b_ = 0;
  std::vector<std::uint64_t> fen_;
  LabelMap map_;
  std::uint64_t next_id_ = 1;
};

}  // namespace fmdraw
