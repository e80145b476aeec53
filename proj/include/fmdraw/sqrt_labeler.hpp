#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "fmdraw/order_core.hpp"

namespace fmdraw {

/// O(1) amortized bulk moves with B = 2*ceil(sqrt(n)): the label space is
/// partitioned into chunk windows of width W = 2*ceil(sqrt(n_cap)), elements
/// packed left within their window. A full chunk splits in half after all
/// chunks to its right shift by one window (one bulk move each).
class SqrtChunkLabeler : public Labeler {
 public:
  explicit SqrtChunkLabeler(std::size_t initial_n_cap = 16);

  InsertResult insert(ElementHandle anchor, Side side) override;
  Label label_of(ElementHandle h) const override;
  std::size_t size() const override { return count_; }
  Label label_space() const override {
    return static_cast<Label>(4 * n_cap_);
  }
  Label bulk_limit() const override { return width_; }

  std::size_t chunk_count() const { return chunks_.size(); }
  Label chunk_width() const { return width_; }

 private:
  struct Chunk {
    Label base = 0;
    std::vector<std::uint64_t> elems;
  };
  struct Pos {
    std::size_t chunk = 0;
    std::size_t offset = 0;
  };

  Pos pos_of(ElementHandle h) const;
  void reindex_from(std::size_t chunk_idx);
  void split(std::size_t chunk_idx, std::vector<RelabelOp>& out);
  void rebuild(std::vector<RelabelOp>& out);

  std::size_t n_cap_;
  Label width_ = 0;  // W = 2*ceil(sqrt(n_cap)); also the declared B
  std::size_t count_ = 0;
  std::vector<Chunk> chunks_;
  std::unordered_map<std::uint64_t, Pos> pos_;
  std::uint64_t next_id_ = 1;
};

}  // namespace fmdraw
