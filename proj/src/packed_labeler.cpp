#include "fmdraw/packed_labeler.hpp"

#include <algorithm>
#include <cmath>

namespace fmdraw {

namespace {

std::size_t ceil_pow2(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

int ceil_log2(std::size_t v) {
  int l = 0;
  std::size_t p = 1;
  while (p < v) {
    p <<= 1;
    ++l;
  }
  return l;
}

}  // namespace

PackedArrayLabeler::PackedArrayLabeler(bool bulk_runs,
                                       std::size_t initial_n_cap)
    : bulk_runs_(bulk_runs),
      n_cap_(ceil_pow2(initial_n_cap < 16 ? 16 : initial_n_cap)) {
  recompute_geometry();
}

void PackedArrayLabeler::recompute_geometry() {
  space_ = static_cast<Label>(4 * n_cap_);
  bulk_b_ = std::max<Label>(1, ceil_log2(n_cap_));
  std::size_t min_leaf = bulk_runs_
                             ? std::max<std::size_t>(
                                   16, 4 * static_cast<std::size_t>(bulk_b_))
                             : std::max<std::size_t>(
                                   8, 2 * static_cast<std::size_t>(
                                          ceil_log2(static_cast<std::size_t>(
                                              space_))));
  leaf_ = static_cast<Label>(ceil_pow2(min_leaf));
  if (leaf_ > space_) leaf_ = space_;
  height_ = ceil_log2(static_cast<std::size_t>(space_ / leaf_));
  fen_.assign(static_cast<std::size_t>(space_ / leaf_) + 1, 0);
}

double PackedArrayLabeler::threshold(int h) const {
  if (height_ == 0) return 1.0;
  return 1.0 - 0.5 * static_cast<double>(h) / static_cast<double>(height_);
}

std::uint64_t PackedArrayLabeler::window_cap(int h) const {
  Label wsize = leaf_ << h;
  return static_cast<std::uint64_t>(
      std::floor(threshold(h) * static_cast<double>(wsize)));
}

void PackedArrayLabeler::fen_add(Label leaf, int delta) {
  for (auto i = static_cast<std::size_t>(leaf) + 1; i < fen_.size();
       i += i & (~i + 1))
    fen_[i] += static_cast<std::uint64_t>(delta);
}

std::uint64_t PackedArrayLabeler::fen_prefix(Label leaf_end) const {
  std::uint64_t s = 0;
  for (auto i = static_cast<std::size_t>(leaf_end); i > 0; i -= i & (~i + 1))
    s += fen_[i];
  return s;
}

std::uint64_t PackedArrayLabeler::window_count(Label label, int h) const {
  Label wsize = leaf_ << h;
  Label wlo = (label / wsize) * wsize;
  return fen_prefix((wlo + wsize) / leaf_) - fen_prefix(wlo / leaf_);
}

void PackedArrayLabeler::apply_moves(const std::vector<PlannedMove>& moves,
                                     std::vector<RelabelOp>& out) {
  std::vector<RelabelOp> ops;
  plan_moves(moves, bulk_runs_ ? bulk_b_ : 0, ops);
  for (const auto& op : ops) map_.apply(op);
  for (const auto& m : moves) {
    if (m.old_label / leaf_ != m.new_label / leaf_) {
      fen_add(m.old_label / leaf_, -1);
      fen_add(m.new_label / leaf_, +1);
    }
  }
  out.insert(out.end(), ops.begin(), ops.end());
}

Label PackedArrayLabeler::respread(Label wlo, Label wsize, long insert_rank,
                                   std::vector<RelabelOp>& out) {
  std::vector<std::pair<Label, std::uint64_t>> in_range;
  for (auto it = map_.by_label().lower_bound(wlo);
       it != map_.by_label().end() && it->first < wlo + wsize; ++it)
    in_range.emplace_back(it->first, it->second);

  const long k = static_cast<long>(in_range.size());
  const long total = insert_rank >= 0 ? k + 1 : k;
  if (total == 0) return -1;

  // Slot for logical index j of `total` ordered positions.
  std::vector<Label> slots(static_cast<std::size_t>(total));
  if (bulk_runs_) {
    Label runs = (total + bulk_b_ - 1) / bulk_b_;
    Label cursor = wlo;
    for (long j = 0; j < total; ++j) {
      Label run = j / bulk_b_;
      if (j % bulk_b_ == 0) {
        cursor = std::max(cursor, wlo + run * wsize / runs);
        // Never let the tail of a run spill past the window.
        cursor = std::min(cursor, wlo + wsize - (total - j));
      }
      slots[static_cast<std::size_t>(j)] = cursor++;
    }
  } else {
    for (long j = 0; j < total; ++j)
      slots[static_cast<std::size_t>(j)] = wlo + j * wsize / total;
  }

  Label reserved = -1;
  std::vector<PlannedMove> moves;
  moves.reserve(in_range.size());
  long slot_idx = 0;
  for (long j = 0; j < total; ++j) {
    if (j == insert_rank) {
      reserved = slots[static_cast<std::size_t>(slot_idx++)];
      continue;
    }
    long src = insert_rank >= 0 && j > insert_rank ? j - 1 : j;
    const auto& [old_label, id] = in_range[static_cast<std::size_t>(src)];
    Label target = slots[static_cast<std::size_t>(slot_idx++)];
    if (target != old_label)
      moves.push_back(PlannedMove{ElementHandle{id}, old_label, target});
  }
  apply_moves(moves, out);
  return reserved;
}

void PackedArrayLabeler::grow(std::vector<RelabelOp>& out) {
  // Stash current order; relabel everything into the doubled space.
  auto handles = map_.ordered_handles();
  std::vector<Label> old_labels;
  old_labels.reserve(handles.size());
  for (const auto& h : handles) old_labels.push_back(map_.label_of(h));

  n_cap_ *= 2;
  recompute_geometry();
  for (std::size_t i = 0; i < handles.size(); ++i)
    fen_add(old_labels[i] / leaf_, +1);

  respread(0, space_, -1, out);
}

void PackedArrayLabeler::fixup(Label label, std::vector<RelabelOp>& out) {
  int violator = -1;
  for (int h = 0; h <= height_; ++h) {
    if (window_count(label, h) > window_cap(h)) violator = h;
  }
  if (violator < 0) return;
  if (violator >= height_) {
    grow(out);
    return;
  }
  Label wsize = leaf_ << (violator + 1);
  respread((label / wsize) * wsize, wsize, -1, out);
}

void PackedArrayLabeler::settle(InsertResult& res) {
  fixup(res.assigned, res.relabels);
  res.assigned = map_.label_of(res.handle);
  std::erase_if(res.relabels, [&](const RelabelOp& op) {
    return !op.is_bulk() && op.single().handle == res.handle;
  });
}

std::vector<RelabelOp> PackedArrayLabeler::erase(ElementHandle h) {
  Label l = map_.label_of(h);
  map_.remove(h);
  fen_add(l / leaf_, -1);
  return {};
}

InsertResult PackedArrayLabeler::insert(ElementHandle anchor, Side side) {
  InsertResult res;
  res.handle = ElementHandle{next_id_++};

  if (anchor.is_null()) {
    if (map_.size() != 0)
      throw Error(ErrorCode::stale_handle,
                  "null anchor is only valid for the first insertion");
    res.assigned = space_ / 2;
    map_.place(res.handle, res.assigned);
    fen_add(res.assigned / leaf_, +1);
    return res;
  }

  if (map_.size() + 1 > n_cap_) grow(res.relabels);

  Label la = map_.label_of(anchor);
  const auto& by_label = map_.by_label();
  auto it = by_label.find(la);

  // Adjacent free slot.
  if (side == Side::after) {
    auto next = std::next(it);
    Label next_label = next == by_label.end() ? space_ : next->first;
    if (next_label > la + 1) {
      res.assigned = la + 1;
      map_.place(res.handle, res.assigned);
      fen_add(res.assigned / leaf_, +1);
      settle(res);
      return res;
    }
  } else {
    Label prev_label = it == by_label.begin() ? -1 : std::prev(it)->first;
    if (prev_label < la - 1) {
      res.assigned = la - 1;
      map_.place(res.handle, res.assigned);
      fen_add(res.assigned / leaf_, +1);
      settle(res);
      return res;
    }
  }

  // Shift the contiguous occupied block toward the nearest gap in the leaf.
  Label pos = side == Side::after ? la + 1 : la;  // slot the new element wants
  Label wlo = (la / leaf_) * leaf_;
  Label whi = wlo + leaf_;
  if (window_count(la, 0) < static_cast<std::uint64_t>(leaf_)) {
    std::vector<bool> occupied(static_cast<std::size_t>(leaf_), false);
    for (auto jt = by_label.lower_bound(wlo);
         jt != by_label.end() && jt->first < whi; ++jt)
      occupied[static_cast<std::size_t>(jt->first - wlo)] = true;
    Label right_gap = -1, left_gap = -1;
    for (Label g = pos; g < whi; ++g)
      if (!occupied[static_cast<std::size_t>(g - wlo)]) {
        right_gap = g;
        break;
      }
    for (Label g = std::min(pos, whi) - 1; g >= wlo; --g)
      if (!occupied[static_cast<std::size_t>(g - wlo)]) {
        left_gap = g;
        break;
      }

    std::vector<PlannedMove> moves;
    if (right_gap >= 0 &&
        (left_gap < 0 || right_gap - pos <= pos - left_gap)) {
      // Block [pos, right_gap-1] shifts up by one.
      for (auto jt = by_label.lower_bound(pos);
           jt != by_label.end() && jt->first < right_gap; ++jt)
        moves.push_back(
            PlannedMove{ElementHandle{jt->second}, jt->first, jt->first + 1});
      apply_moves(moves, res.relabels);
      res.assigned = pos;
    } else {
      // Block [left_gap+1, pos-1] shifts down by one.
      for (auto jt = by_label.lower_bound(left_gap + 1);
           jt != by_label.end() && jt->first <= pos - 1; ++jt)
        moves.push_back(
            PlannedMove{ElementHandle{jt->second}, jt->first, jt->first - 1});
      apply_moves(moves, res.relabels);
      res.assigned = pos - 1;
    }
    map_.place(res.handle, res.assigned);
    fen_add(res.assigned / leaf_, +1);
    settle(res);
    return res;
  }

  // Leaf full: re-spread the smallest enclosing window with room.
  for (int h = 1; h <= height_; ++h) {
    if (window_count(la, h) + 1 <= window_cap(h)) {
      Label wsize = leaf_ << h;
      Label rlo = (la / wsize) * wsize;
      long rank = static_cast<long>(map_.count_in(rlo, la)) -
                  (side == Side::before ? 1 : 0);
      Label reserved = respread(rlo, wsize, rank, res.relabels);
      res.assigned = reserved;
      map_.place(res.handle, res.assigned);
      fen_add(res.assigned / leaf_, +1);
      settle(res);
      return res;
    }
  }
  grow(res.relabels);
  // After growing, the anchor has a fresh neighborhood; retry.
  auto retry = insert(anchor, side);
  res.assigned = retry.assigned;
  res.handle = retry.handle;
  res.relabels.insert(res.relabels.end(), retry.relabels.begin(),
                      retry.relabels.end());
  return res;
}

}  // namespace fmdraw
