#include "fmdraw/order_core.hpp"

namespace fmdraw {

void LabelMap::place(ElementHandle h, Label l) {
  if (by_handle_.count(h.id))
    throw Error(ErrorCode::invalid_relabel_batch, "element already placed");
  if (by_label_.count(l))
    throw Error(ErrorCode::invalid_relabel_batch, "label already occupied");
  by_label_[l] = h.id;
  by_handle_[h.id] = l;
}

void LabelMap::remove(ElementHandle h) {
  auto it = by_handle_.find(h.id);
  if (it == by_handle_.end())
    throw Error(ErrorCode::stale_handle, "stale handle");
  by_label_.erase(it->second);
  by_handle_.erase(it);
}

void LabelMap::apply(const RelabelOp& op) {
  if (!op.is_bulk()) {
    const auto& s = op.single();
    auto it = by_handle_.find(s.handle.id);
    if (it == by_handle_.end() || it->second != s.old_label)
      throw Error(ErrorCode::invalid_relabel_batch,
                  "single relabel does not match current state");
    if (s.new_label != s.old_label && by_label_.count(s.new_label))
      throw Error(ErrorCode::invalid_relabel_batch,
                  "single relabel collides with a live element");
    // Reorder check: the element must keep its rank.
    auto pos = by_label_.find(s.old_label);
    if (pos != by_label_.begin()) {
      auto prev = std::prev(pos);
      if (prev->first > s.new_label)
        throw Error(ErrorCode::invalid_relabel_batch,
                    "single relabel reorders past predecessor");
    }
    auto next = std::next(pos);
    if (next != by_label_.end() && next->first < s.new_label)
      throw Error(ErrorCode::invalid_relabel_batch,
                  "single relabel reorders past successor");
    by_label_.erase(pos);
    by_label_[s.new_label] = s.handle.id;
    it->second = s.new_label;
    return;
  }

  const auto& b = op.bulk();
  if (b.lo > b.hi)
    throw Error(ErrorCode::invalid_relabel_batch, "bulk interval inverted");
  if (b.delta == 0) return;
  // Target region outside the source interval must be empty.
  Label tlo = b.lo + b.delta, thi = b.hi + b.delta;
  for (auto it = by_label_.lower_bound(tlo);
       it != by_label_.end() && it->first <= thi; ++it) {
    if (it->first < b.lo || it->first > b.hi)
      throw Error(ErrorCode::invalid_relabel_batch,
                  "bulk move collides with a live element");
  }
  std::vector<std::pair<Label, std::uint64_t>> moved;
  auto it = by_label_.lower_bound(b.lo);
  while (it != by_label_.end() && it->first <= b.hi) {
    moved.emplace_back(it->first, it->second);
    it = by_label_.erase(it);
  }
  for (const auto& [l, id] : moved) {
    by_label_[l + b.delta] = id;
    by_handle_[id] = l + b.delta;
  }
}

std::vector<ElementHandle> LabelMap::ordered_handles() const {
  std::vector<ElementHandle> out;
  out.reserve(by_label_.size());
  for (const auto& [l, id] : by_label_) out.push_back(ElementHandle{id});
  return out;
}

std::size_t LabelMap::count_in(Label lo, Label hi) const {
  auto first = by_label_.lower_bound(lo);
  auto last = by_label_.upper_bound(hi);
  return static_cast<std::size_t>(std::distance(first, last));
}

LabelMap apply_relabels(LabelMap map, const std::vector<RelabelOp>& ops) {
  auto order_before = map.ordered_handles();
  map.apply_all(ops);
  auto order_after = map.ordered_handles();
  if (order_before.size() != order_after.size())
    throw Error(ErrorCode::invalid_relabel_batch, "element count changed");
  for (std::size_t i = 0; i < order_before.size(); ++i) {
    if (!(order_before[i] == order_after[i]))
      throw Error(ErrorCode::invalid_relabel_batch, "relabel batch reordered");
  }
  return map;
}

OpCounts count_ops(const std::vector<RelabelOp>& ops, const LabelMap& pre) {
  LabelMap state = pre;
  return count_and_apply(ops, state);
}

OpCounts count_and_apply(const std::vector<RelabelOp>& ops, LabelMap& map) {
  OpCounts c;
  for (const auto& op : ops) {
    if (op.is_bulk()) {
      const auto& b = op.bulk();
      c.bulks++;
      auto covered = static_cast<std::uint64_t>(map.count_in(b.lo, b.hi));
      if (covered > c.max_bulk_size) c.max_bulk_size = covered;
    } else {
      c.singles++;
    }
    map.apply(op);
  }
  return c;
}

}  // namespace fmdraw
