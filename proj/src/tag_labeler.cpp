#include "fmdraw/tag_labeler.hpp"

#include <cmath>

#include "fmdraw/move_plan.hpp"

namespace fmdraw {

namespace {

std::size_t ceil_pow2(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

}  // namespace

TagListLabeler::TagListLabeler(int exponent, std::size_t initial_n_max)
    : exponent_(exponent), n_max_(ceil_pow2(initial_n_max < 4 ? 4 : initial_n_max)) {
  if (exponent_ < 2) exponent_ = 2;
  recompute_space();
}

void TagListLabeler::recompute_space() {
  space_ = 1;
  for (int i = 0; i < exponent_; ++i) space_ *= static_cast<Label>(n_max_);
  height_ = 0;
  while ((Label{1} << height_) < space_) ++height_;
  // alpha^height == N / n_max, so root capacity is exactly n_max.
  double alpha =
      std::pow(static_cast<double>(space_) / static_cast<double>(n_max_),
               1.0 / height_);
  level_cap_.assign(static_cast<std::size_t>(height_) + 1, 0);
  double cap = 1.0;
  for (int i = 0; i <= height_; ++i) {
    level_cap_[static_cast<std::size_t>(i)] =
        static_cast<std::uint64_t>(std::floor(cap));
    cap *= 2.0 / alpha;
  }
  level_cap_[static_cast<std::size_t>(height_)] =
      static_cast<std::uint64_t>(n_max_);
}

Label TagListLabeler::respread(Label lo, Label size, std::size_t insert_rank,
                               std::vector<RelabelOp>& out) {
  std::vector<std::pair<Label, std::uint64_t>> in_range;
  for (auto it = map_.by_label().lower_bound(lo);
       it != map_.by_label().end() && it->first < lo + size; ++it)
    in_range.emplace_back(it->first, it->second);

  const auto k = in_range.size();
  std::vector<PlannedMove> moves;
  moves.reserve(k);
  Label reserved = -1;
  std::size_t slot = 0;
  auto slot_label = [&](std::size_t j) {
    return lo + static_cast<Label>((static_cast<unsigned long long>(j) + 1) *
                                   static_cast<unsigned long long>(size) /
                                   (k + 2));
  };
  for (std::size_t j = 0; j <= k; ++j) {
    if (j == insert_rank) reserved = slot_label(slot++);
    if (j < k) {
      moves.push_back(PlannedMove{ElementHandle{in_range[j].second},
                                  in_range[j].first, slot_label(slot++)});
    }
  }
  plan_moves(moves, 0, out);
  return reserved;
}

void TagListLabeler::rebuild(std::vector<RelabelOp>& out) {
  n_max_ *= 2;
  recompute_space();
  auto handles = map_.ordered_handles();
  std::vector<PlannedMove> moves;
  moves.reserve(handles.size());
  const auto n = handles.size();
  for (std::size_t j = 0; j < n; ++j) {
    Label target = static_cast<Label>(
        (static_cast<unsigned long long>(j) + 1) *
        static_cast<unsigned long long>(space_) / (n + 1));
    moves.push_back(
        PlannedMove{handles[j], map_.label_of(handles[j]), target});
  }
  std::vector<RelabelOp> ops;
  plan_moves(moves, 0, ops);
  for (const auto& op : ops) map_.apply(op);
  out.insert(out.end(), ops.begin(), ops.end());
}

InsertResult TagListLabeler::insert(ElementHandle anchor, Side side) {
  InsertResult res;
  res.handle = ElementHandle{next_id_++};

  if (anchor.is_null()) {
    if (map_.size() != 0)
      throw Error(ErrorCode::stale_handle,
                  "null anchor is only valid for the first insertion");
    res.assigned = space_ / 2;
    map_.place(res.handle, res.assigned);
    return res;
  }

  if (map_.size() + 1 > n_max_) rebuild(res.relabels);

  Label la = map_.label_of(anchor);
  const auto& by_label = map_.by_label();
  auto it = by_label.find(la);
  Label lo, hi;  // open interval (lo, hi) receives the new label
  if (side == Side::after) {
    auto next = std::next(it);
    lo = la;
    hi = next == by_label.end() ? space_ : next->first;
  } else {
    lo = it == by_label.begin() ? -1 : std::prev(it)->first;
    hi = la;
  }

  if (hi - lo >= 2) {
    res.assigned = lo + (hi - lo) / 2;
    map_.place(res.handle, res.assigned);
    return res;
  }

  // No gap: re-spread the smallest enclosing tag range under capacity.
  for (int i = 1; i <= height_; ++i) {
    Label rsize = Label{1} << i;
    Label rlo = (la / rsize) * rsize;
    std::size_t count = map_.count_in(rlo, rlo + rsize - 1);
    if (count + 1 <= level_cap_[static_cast<std::size_t>(i)]) {
      std::size_t rank_in_range =
          map_.count_in(rlo, la) - (side == Side::before ? 1 : 0);
      std::vector<RelabelOp> ops;
      Label reserved = respread(rlo, rsize, rank_in_range, ops);
      for (const auto& op : ops) map_.apply(op);
      res.relabels.insert(res.relabels.end(), ops.begin(), ops.end());
      res.assigned = reserved;
      map_.place(res.handle, res.assigned);
      return res;
    }
  }
  throw Error(ErrorCode::capacity, "capacity: tag range cannot fit element");
}

}  // namespace fmdraw
