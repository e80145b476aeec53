#include "fmdraw/sqrt_labeler.hpp"

#include <algorithm>
#include <cmath>

#include "fmdraw/move_plan.hpp"

namespace fmdraw {

namespace {

Label chunk_width_for(std::size_t n_cap) {
  auto r = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n_cap))));
  return static_cast<Label>(2 * r);
}

}  // namespace

SqrtChunkLabeler::SqrtChunkLabeler(std::size_t initial_n_cap)
    : n_cap_(initial_n_cap < 16 ? 16 : initial_n_cap),
      width_(chunk_width_for(n_cap_)) {}

SqrtChunkLabeler::Pos SqrtChunkLabeler::pos_of(ElementHandle h) const {
  auto it = pos_.find(h.id);
  if (it == pos_.end()) throw Error(ErrorCode::stale_handle, "stale handle");
  return it->second;
}

Label SqrtChunkLabeler::label_of(ElementHandle h) const {
  Pos p = pos_of(h);
  return chunks_[p.chunk].base + static_cast<Label>(p.offset);
}

void SqrtChunkLabeler::reindex_from(std::size_t chunk_idx) {
  for (std::size_t c = chunk_idx; c < chunks_.size(); ++c) {
    for (std::size_t o = 0; o < chunks_[c].elems.size(); ++o)
      pos_[chunks_[c].elems[o]] = Pos{c, o};
  }
}

void SqrtChunkLabeler::split(std::size_t i, std::vector<RelabelOp>& out) {
  // All chunks right of i shift by one window, rightmost first.
  for (std::size_t j = chunks_.size(); j-- > i + 1;) {
    Chunk& c = chunks_[j];
    if (!c.elems.empty())
      out.push_back(RelabelOp::make_bulk(
          c.base, c.base + static_cast<Label>(c.elems.size()) - 1, width_));
    c.base += width_;
  }
  // Upper half of chunk i moves into the vacated window.
  Chunk& src = chunks_[i];
  auto half = src.elems.size() / 2;
  Chunk fresh;
  fresh.base = src.base + width_;
  fresh.elems.assign(src.elems.begin() + static_cast<std::ptrdiff_t>(half),
                     src.elems.end());
  Label src_lo = src.base + static_cast<Label>(half);
  Label src_hi = src.base + static_cast<Label>(src.elems.size()) - 1;
  out.push_back(RelabelOp::make_bulk(src_lo, src_hi, fresh.base - src_lo));
  src.elems.resize(half);
  chunks_.insert(chunks_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                 std::move(fresh));
  reindex_from(i);
}

void SqrtChunkLabeler::rebuild(std::vector<RelabelOp>& out) {
  std::vector<std::pair<std::uint64_t, Label>> ordered;
  ordered.reserve(count_);
  for (const auto& c : chunks_)
    for (std::size_t o = 0; o < c.elems.size(); ++o)
      ordered.emplace_back(c.elems[o], c.base + static_cast<Label>(o));

  while (count_ + 1 > n_cap_) n_cap_ *= 2;
  Label old_width = width_;
  width_ = chunk_width_for(n_cap_);
  Label half = width_ / 2;

  std::vector<Chunk> next;
  std::vector<PlannedMove> moves;
  for (std::size_t j = 0; j < ordered.size(); ++j) {
    if (j % static_cast<std::size_t>(half) == 0) {
      Chunk c;
      c.base = static_cast<Label>(next.size()) * width_;
      next.push_back(std::move(c));
    }
    Chunk& c = next.back();
    Label target = c.base + static_cast<Label>(c.elems.size());
    c.elems.push_back(ordered[j].first);
    if (target != ordered[j].second)
      moves.push_back(
          PlannedMove{ElementHandle{ordered[j].first}, ordered[j].second,
                      target});
  }
  plan_moves(moves, std::max(width_, old_width), out);
  chunks_ = std::move(next);
  reindex_from(0);
}

InsertResult SqrtChunkLabeler::insert(ElementHandle anchor, Side side) {
  InsertResult res;

  if (anchor.is_null()) {
    if (count_ != 0)
      throw Error(ErrorCode::stale_handle,
                  "null anchor is only valid for the first insertion");
    res.handle = ElementHandle{next_id_++};
    chunks_.push_back(Chunk{0, {res.handle.id}});
    pos_[res.handle.id] = Pos{0, 0};
    count_ = 1;
    res.assigned = 0;
    return res;
  }

  if (count_ + 1 > n_cap_) rebuild(res.relabels);

  Pos p = pos_of(anchor);
  std::size_t at = side == Side::after ? p.offset + 1 : p.offset;

  if (chunks_[p.chunk].elems.size() >= static_cast<std::size_t>(width_)) {
    split(p.chunk, res.relabels);
    p = pos_of(anchor);
    at = side == Side::after ? p.offset + 1 : p.offset;
  }

  Chunk& c = chunks_[p.chunk];
  // Suffix [at, size) shifts right by one; empty when appending at the end.
  if (at < c.elems.size()) {
    res.relabels.push_back(RelabelOp::make_bulk(
        c.base + static_cast<Label>(at),
        c.base + static_cast<Label>(c.elems.size()) - 1, 1));
  }
  res.handle = ElementHandle{next_id_++};
  c.elems.insert(c.elems.begin() + static_cast<std::ptrdiff_t>(at),
                 res.handle.id);
  for (std::size_t o = at; o < c.elems.size(); ++o)
    pos_[c.elems[o]] = Pos{p.chunk, o};
  count_++;
  res.assigned = c.base + static_cast<Label>(at);
  return res;
}

}  // namespace fmdraw
