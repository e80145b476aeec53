#include "fmdraw/twolevel_labeler.hpp"

#include <algorithm>
#include <cmath>

#include "fmdraw/move_plan.hpp"

namespace fmdraw {

namespace {

int ceil_log2(std::size_t v) {
  int l = 0;
  std::size_t p = 1;
  while (p < v) {
    p <<= 1;
    ++l;
  }
  return l;
}

Label block_width_for(std::size_t n_cap) {
  return 2 * std::max<Label>(2, ceil_log2(n_cap));
}

}  // namespace

TwoLevelLabeler::TwoLevelLabeler(std::size_t initial_n_cap)
    : n_cap_(initial_n_cap < 16 ? 16 : initial_n_cap),
      block_(block_width_for(n_cap_)),
      top_(std::make_unique<TagListLabeler>()) {}

TwoLevelLabeler::Pos TwoLevelLabeler::pos_of(ElementHandle h) const {
  auto it = pos_.find(h.id);
  if (it == pos_.end()) throw Error(ErrorCode::stale_handle, "stale handle");
  return it->second;
}

Label TwoLevelLabeler::label_of(ElementHandle h) const {
  Pos p = pos_of(h);
  return base_of(*p.sub) + static_cast<Label>(p.offset);
}

void TwoLevelLabeler::realize_top_ops(const std::vector<RelabelOp>& top_ops,
                                      std::vector<RelabelOp>& out) {
  for (const auto& op : top_ops) {
    const auto& s = op.single();
    auto it = sub_by_top_.find(s.handle.id);
    if (it == sub_by_top_.end())
      throw Error(ErrorCode::invariant_breach,
                  "top-level relabel names unknown sublist");
    const Sub& sub = *it->second;
    Label lo = s.old_label * block_;
    Label hi = lo + static_cast<Label>(sub.elems.size()) - 1;
    out.push_back(
        RelabelOp::make_bulk(lo, hi, (s.new_label - s.old_label) * block_));
  }
}

void TwoLevelLabeler::split(std::list<Sub>::iterator it,
                            std::vector<RelabelOp>& out) {
  auto top_res = top_->insert_after(it->top_handle);
  realize_top_ops(top_res.relabels, out);
  last_split_top_relabels_ = top_res.relabels.size();

  Sub fresh;
  fresh.top_handle = top_res.handle;
  auto half = it->elems.size() / 2;
  fresh.elems.assign(it->elems.begin() + static_cast<std::ptrdiff_t>(half),
                     it->elems.end());

  Label src_base = base_of(*it);
  Label dst_base = top_res.assigned * block_;
  Label lo = src_base + static_cast<Label>(half);
  Label hi = src_base + static_cast<Label>(it->elems.size()) - 1;
  out.push_back(RelabelOp::make_bulk(lo, hi, dst_base - lo));

  it->elems.resize(half);
  auto fit = subs_.insert(std::next(it), std::move(fresh));
  sub_by_top_[fit->top_handle.id] = fit;
  for (std::size_t o = 0; o < fit->elems.size(); ++o)
    pos_[fit->elems[o]] = Pos{fit, o};
}

void TwoLevelLabeler::rebuild(std::vector<RelabelOp>& out) {
  std::vector<std::pair<std::uint64_t, Label>> ordered;
  ordered.reserve(count_);
  for (auto& s : subs_) {
    Label base = base_of(s);
    for (std::size_t o = 0; o < s.elems.size(); ++o)
      ordered.emplace_back(s.elems[o], base + static_cast<Label>(o));
  }

  while (count_ + 1 > n_cap_) n_cap_ *= 2;
  Label old_block = block_;
  block_ = block_width_for(n_cap_);
  Label half = block_ / 2;

  top_ = std::make_unique<TagListLabeler>();
  subs_.clear();
  sub_by_top_.clear();

  std::vector<PlannedMove> moves;
  ElementHandle prev_top = kNullAnchor;
  for (std::size_t j = 0; j < ordered.size(); ++j) {
    if (j % static_cast<std::size_t>(half) == 0) {
      auto top_res = top_->insert_after(prev_top);
      prev_top = top_res.handle;
      subs_.push_back(Sub{top_res.handle, {}});
      sub_by_top_[top_res.handle.id] = std::prev(subs_.end());
    }
    Sub& s = subs_.back();
    s.elems.push_back(ordered[j].first);
  }
  // Bases are final only after all top insertions settled; plan the element
  // moves from old to new labels in one monotone batch.
  std::size_t j = 0;
  for (auto it = subs_.begin(); it != subs_.end(); ++it) {
    Label base = base_of(*it);
    for (std::size_t o = 0; o < it->elems.size(); ++o, ++j) {
      pos_[it->elems[o]] = Pos{it, o};
      Label target = base + static_cast<Label>(o);
      if (target != ordered[j].second)
        moves.push_back(PlannedMove{ElementHandle{ordered[j].first},
                                    ordered[j].second, target});
    }
  }
  plan_moves(moves, std::max(block_, old_block), out);
}

InsertResult TwoLevelLabeler::insert(ElementHandle anchor, Side side) {
  InsertResult res;

  if (anchor.is_null()) {
    if (count_ != 0)
      throw Error(ErrorCode::stale_handle,
                  "null anchor is only valid for the first insertion");
    auto top_res = top_->insert_after(kNullAnchor);
    res.handle = ElementHandle{next_id_++};
    subs_.push_back(Sub{top_res.handle, {res.handle.id}});
    sub_by_top_[top_res.handle.id] = std::prev(subs_.end());
    pos_[res.handle.id] = Pos{std::prev(subs_.end()), 0};
    count_ = 1;
    res.assigned = base_of(subs_.back());
    return res;
  }

  if (count_ + 1 > n_cap_) rebuild(res.relabels);

  Pos p = pos_of(anchor);
  if (p.sub->elems.size() >= static_cast<std::size_t>(block_)) {
    split(p.sub, res.relabels);
    p = pos_of(anchor);
  }

  std::size_t at = side == Side::after ? p.offset + 1 : p.offset;
  Sub& s = *p.sub;
  Label base = base_of(s);
  if (at < s.elems.size()) {
    res.relabels.push_back(RelabelOp::make_bulk(
        base + static_cast<Label>(at),
        base + static_cast<Label>(s.elems.size()) - 1, 1));
  }
  res.handle = ElementHandle{next_id_++};
  s.elems.insert(s.elems.begin() + static_cast<std::ptrdiff_t>(at),
                 res.handle.id);
  for (std::size_t o = at; o < s.elems.size(); ++o)
    pos_[s.elems[o]] = Pos{p.sub, o};
  count_++;
  res.assigned = base + static_cast<Label>(at);
  return res;
}

}  // namespace fmdraw
