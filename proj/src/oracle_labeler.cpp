#include "fmdraw/oracle_labeler.hpp"

#include "fmdraw/move_plan.hpp"

namespace fmdraw {

std::size_t OracleLabeler::rank_of(ElementHandle h) const {
  auto it = rank_.find(h.id);
  if (it == rank_.end()) throw Error(ErrorCode::stale_handle, "stale handle");
  return it->second;
}

InsertResult OracleLabeler::insert(ElementHandle anchor, Side side) {
  std::size_t pos;  // rank the new element will take
  if (anchor.is_null()) {
    if (!order_.empty())
      throw Error(ErrorCode::stale_handle,
                  "null anchor is only valid for the first insertion");
    pos = 0;
  } else {
    std::size_t r = rank_of(anchor);
    pos = side == Side::after ? r + 1 : r;
  }

  InsertResult res;
  res.handle = ElementHandle{next_id_++};
  res.assigned = static_cast<Label>(pos) + 1;

  // Suffix shifts right by one; rightmost first.
  std::vector<PlannedMove> moves;
  moves.reserve(order_.size() - pos);
  for (std::size_t i = pos; i < order_.size(); ++i) {
    moves.push_back(PlannedMove{ElementHandle{order_[i]},
                                static_cast<Label>(i) + 1,
                                static_cast<Label>(i) + 2});
  }
  plan_moves(moves, 0, res.relabels);

  order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(pos),
                res.handle.id);
  for (std::size_t i = pos; i < order_.size(); ++i) rank_[order_[i]] = i;
  return res;
}

Label OracleLabeler::label_of(ElementHandle h) const {
  return static_cast<Label>(rank_of(h)) + 1;
}

std::vector<RelabelOp> OracleLabeler::erase(ElementHandle h) {
  std::size_t pos = rank_of(h);
  order_.erase(order_.begin() + static_cast<std::ptrdiff_t>(pos));
  rank_.erase(h.id);
  std::vector<PlannedMove> moves;
  for (std::size_t i = pos; i < order_.size(); ++i) {
    moves.push_back(PlannedMove{ElementHandle{order_[i]},
                                static_cast<Label>(i) + 2,
                                static_cast<Label>(i) + 1});
    rank_[order_[i]] = i;
  }
  std::vector<RelabelOp> ops;
  plan_moves(moves, 0, ops);
  return ops;
}

}  // namespace fmdraw
