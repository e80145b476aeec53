#pragma once

#include <vector>

#include "fmdraw/order_core.hpp"

namespace fmdraw {

/// Amortized online list labeling over a polynomial tag range N = n_max^c.
/// An implicit binary tag tree over [0, N) carries per-level capacities that
/// shrink geometrically toward the root; inserting into a fully packed spot
/// evenly re-spreads the smallest tag range still under its capacity.
class TagListLabeler : public Labeler {
 public:
  explicit TagListLabeler(int exponent = 2, std::size_t initial_n_max = 16);

  InsertResult insert(ElementHandle anchor, Side side) override;
  Label label_of(ElementHandle h) const override {
    return map_.label_of(h);
  }
  std::size_t size() const override { return map_.size(); }
  Label label_space() const override { return space_; }

  std::size_t n_max() const { return n_max_; }
  const LabelMap& state() const { return map_; }

 private:
  void recompute_space();
  void rebuild(std::vector<RelabelOp>& out);
  /// Even re-spread of the tag range [lo, lo+size) making room for one new
  /// element at `insert_rank` among the range's current elements. Returns
  /// the label reserved for the new element.
  Label respread(Label lo, Label size, std::size_t insert_rank,
                 std::vector<RelabelOp>& out);

  int exponent_;
  std::size_t n_max_;
  Label space_ = 0;   // N; labels live in [0, N)
  int height_ = 0;    // log2(N)
  std::vector<std::uint64_t> level_cap_;  // capacity of a range of size 2^i
  LabelMap map_;
  std::uint64_t next_id_ = 1;
};

}  // namespace fmdraw
