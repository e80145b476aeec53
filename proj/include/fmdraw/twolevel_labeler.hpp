#pragma once

#include <list>
#include <memory>
#include <unordered_map>
#include <vector>

#include "fmdraw/order_core.hpp"
#include "fmdraw/tag_labeler.hpp"

namespace fmdraw {

/// O(1) amortized bulk moves with B = 2*ceil(log2(n)): elements live in
/// sublists of at most B elements, each occupying a contiguous block of B
/// labels. A tag-list labeler orders the blocks; every top-level relabel is
/// realized as one Bulk op relocating the whole block.
class TwoLevelLabeler : public Labeler {
 public:
  explicit TwoLevelLabeler(std::size_t initial_n_cap = 16);

  InsertResult insert(ElementHandle anchor, Side side) override;
  Label label_of(ElementHandle h) const override;
  std::size_t size() const override { return count_; }
  Label label_space() const override {
    return (top_->label_space() + 1) * block_;
  }
  Label bulk_limit() const override { return block_; }

  /// Top-level Single relabels realized as block moves during the most
  /// recent split (test instrumentation).
  std::size_t last_split_top_relabels() const {
    return last_split_top_relabels_;
  }

 private:
  struct Sub {
    ElementHandle top_handle;
    std::vector<std::uint64_t> elems;
  };
  struct Pos {
    std::list<Sub>::iterator sub;
    std::size_t offset = 0;
  };

  Label base_of(const Sub& s) const {
    return top_->label_of(s.top_handle) * block_;
  }
  Pos pos_of(ElementHandle h) const;
  /// Emit block moves realizing a batch of top-level Singles.
  void realize_top_ops(const std::vector<RelabelOp>& top_ops,
                       std::vector<RelabelOp>& out);
  void split(std::list<Sub>::iterator it, std::vector<RelabelOp>& out);
  void rebuild(std::vector<RelabelOp>& out);

  std::size_t n_cap_;
  Label block_ = 0;  // B: sublist capacity == block width
  std::size_t count_ = 0;
  std::unique_ptr<TagListLabeler> top_;
  std::list<Sub> subs_;  // in order
  std::unordered_map<std::uint64_t, Pos> pos_;
  std::unordered_map<std::uint64_t, std::list<Sub>::iterator> sub_by_top_;
  std::uint64_t next_id_ = 1;
  std::size_t last_split_top_relabels_ = 0;
};

}  // namespace fmdraw
