#include "fmdraw/move_plan.hpp"

#include <cassert>

namespace fmdraw {

namespace {

// Emit one maximal run [i, j) of same-delta movers as Bulk ops of at most
// bulk_cap elements. Order within the run follows `reversed`: right-movers
// are chunked from the right end, left-movers from the left.
void emit_run(const std::vector<PlannedMove>& items, std::size_t i,
              std::size_t j, Label delta, Label bulk_cap, bool from_right,
              std::vector<RelabelOp>& out) {
  if (bulk_cap <= 0) {
    if (from_right) {
      for (std::size_t k = j; k-- > i;)
        out.push_back(RelabelOp::make_single(items[k].handle,
                                             items[k].old_label,
                                             items[k].new_label));
    } else {
      for (std::size_t k = i; k < j; ++k)
        out.push_back(RelabelOp::make_single(items[k].handle,
                                             items[k].old_label,
                                             items[k].new_label));
    }
    return;
  }
  const auto cap = static_cast<std::size_t>(bulk_cap);
  if (from_right) {
    std::size_t hi = j;
    while (hi > i) {
      std::size_t lo = hi > i + cap ? hi - cap : i;
      out.push_back(RelabelOp::make_bulk(items[lo].old_label,
                                         items[hi - 1].old_label, delta));
      hi = lo;
    }
  } else {
    std::size_t lo = i;
    while (lo < j) {
      std::size_t hi = std::min(lo + cap, j);
      out.push_back(RelabelOp::make_bulk(items[lo].old_label,
                                         items[hi - 1].old_label, delta));
      lo = hi;
    }
  }
}

}  // namespace

void plan_moves(const std::vector<PlannedMove>& items, Label bulk_cap,
                std::vector<RelabelOp>& out) {
  // Phase 1: right-movers, rightmost maximal run first.
  std::size_t i = items.size();
  while (i > 0) {
    std::size_t j = i;  // run is [run_lo, j)
    Label delta = items[i - 1].new_label - items[i - 1].old_label;
    std::size_t run_lo = i - 1;
    while (run_lo > 0 &&
           items[run_lo - 1].new_label - items[run_lo - 1].old_label == delta)
      --run_lo;
    if (delta > 0) emit_run(items, run_lo, j, delta, bulk_cap, true, out);
    i = run_lo;
  }
  // Phase 2: left-movers, leftmost maximal run first.
  i = 0;
  while (i < items.size()) {
    Label delta = items[i].new_label - items[i].old_label;
    std::size_t j = i + 1;
    while (j < items.size() &&
           items[j].new_label - items[j].old_label == delta)
      ++j;
    if (delta < 0) emit_run(items, i, j, delta, bulk_cap, false, out);
    i = j;
  }
}

}  // namespace fmdraw
