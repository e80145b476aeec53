#pragma once

#include <unordered_map>
#include <vector>

#include "fmdraw/order_core.hpp"

namespace fmdraw {

/// Naive baseline: elements keep labels 1..n, re-packed on every insert.
/// Every state change is reported as Single ops; used as the trustworthy
/// reference implementation in tests and as the `oracle` strategy.
class OracleLabeler : public Labeler {
 public:
  InsertResult insert(ElementHandle anchor, Side side) override;
  Label label_of(ElementHandle h) const override;
  std::size_t size() const override { return order_.size(); }
  Label label_space() const override {
    return static_cast<Label>(order_.size()) + 1;
  }

  bool supports_erase() const override { return true; }
  std::vector<RelabelOp> erase(ElementHandle h) override;

 private:
  std::size_t rank_of(ElementHandle h) const;

  std::vector<std::uint64_t> order_;  // rank -> id; label = rank + 1
  std::unordered_map<std::uint64_t, std::size_t> rank_;
  std::uint64_t next_id_ = 1;
};

}  // namespace fmdraw
