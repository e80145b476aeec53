#pragma once

#include <vector>

#include "fmdraw/order_core.hpp"

namespace fmdraw {

/// One element's planned relocation. Items handed to plan_moves must be in
/// element order, with old and new labels both strictly increasing.
struct PlannedMove {
  ElementHandle handle;
  Label old_label = 0;
  Label new_label = 0;
};

/// Turns a monotone relocation plan into a valid RelabelOp sequence:
/// right-movers are emitted rightmost-first, then left-movers leftmost-first,
/// so no op ever collides with a not-yet-moved element.
///
/// bulk_cap == 0 emits one Single per element. Otherwise consecutive
/// elements sharing a delta are grouped into Bulk ops covering at most
/// bulk_cap elements each.
void plan_moves(const std::vector<PlannedMove>& items, Label bulk_cap,
                std::vector<RelabelOp>& out);

}  // namespace fmdraw
