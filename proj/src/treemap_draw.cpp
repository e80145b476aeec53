#include "fmdraw/treemap_draw.hpp"

#include <algorithm>

namespace fmdraw {

namespace {

const char* axis_name(AxisKind k) { return k == AxisKind::x ? "X" : "Y"; }

AxisKind flip(AxisKind k) { return k == AxisKind::x ? AxisKind::y : AxisKind::x; }

}  // namespace

TreemapDrawing::TreemapDrawing(Strategy s, LabelerConfig cfg)
    : strategy_(s), cfg_(cfg) {
  axes_[0].labeler = make_labeler(s, cfg);
  axes_[1].labeler = make_labeler(s, cfg);
}

Label TreemapDrawing::resolve(const std::string& v, AxisKind k,
                              bool high) const {
  return axis(k).map.label_of(resolve_handle(v, k, high));
}

ElementHandle TreemapDrawing::resolve_handle(const std::string& v, AxisKind k,
                                             bool high) const {
  const std::string* cur = &v;
  while (true) {
    const Node& n = nodes_.at(*cur);
    const CoordRef& slot = high ? n.hi[static_cast<int>(k)]
                                : n.lo[static_cast<int>(k)];
    if (slot) return slot->handle;
    cur = &n.parent;  // root owns all four; the walk terminates
  }
}

void TreemapDrawing::realize(AxisKind k, const std::vector<RelabelOp>& ops,
                             DrawingDelta& delta) {
  Axis& ax = axis(k);
  long long y = k == AxisKind::x ? 0 : 1;
  for (const auto& op : ops) {
    if (op.is_bulk()) {
      const auto& b = op.bulk();
      BulkGroup group;
      if (k == AxisKind::x) group.dx = b.delta;
      else group.dy = b.delta;
      std::uint64_t covered = 0;
      for (auto it = ax.map.by_label().lower_bound(b.lo);
           it != ax.map.by_label().end() && it->first <= b.hi; ++it) {
        group.points.push_back(Point{it->first, y});
        ++covered;
      }
      ax.map.apply(op);
      delta.bulk_groups.push_back(std::move(group));
      ++delta.bulks;
      delta.max_bulk_size = std::max(delta.max_bulk_size, covered);
    } else {
      const auto& s = op.single();
      delta.moved.push_back(MovedItem{axis_name(k),
                                      Point{s.old_label, y},
                                      Point{s.new_label, y}});
      ax.map.apply(op);
      ++delta.singles;
    }
  }
}

TreemapDrawing::CoordRef TreemapDrawing::fresh(AxisKind k,
                                               ElementHandle anchor,
                                               Side side,
                                               DrawingDelta& delta) {
  Axis& ax = axis(k);
  auto res = ax.labeler->insert(anchor, side);
  realize(k, res.relabels, delta);
  ax.map.place(res.handle, res.assigned);
  return std::make_shared<Coord>(Coord{k, res.handle});
}

void TreemapDrawing::make_root(const std::string& r, DrawingDelta& delta) {
  Node n;
  n.primary = AxisKind::x;
  for (AxisKind k : {AxisKind::x, AxisKind::y}) {
    auto lo = fresh(k, kNullAnchor, Side::after, delta);
    auto hi = fresh(k, lo->handle, Side::after, delta);
    n.lo[static_cast<int>(k)] = lo;
    n.hi[static_cast<int>(k)] = hi;
  }
  nodes_.emplace(r, std::move(n));
  order_.push_back(r);
  root_ = r;
  RectBounds b = bounds_of(r);
  delta.placed.push_back(PlacedItem{r, Point{b.left, b.bottom}});
}

DrawingDelta TreemapDrawing::insert_edge(const std::string& a,
                                         const std::string& b,
                                         std::size_t pos_a) {
  DrawingDelta delta;
  if (nodes_.empty()) make_root(a, delta);
  if (!nodes_.count(a))
    throw Error(ErrorCode::disconnected_stream, "unknown vertex: " + a);
  if (nodes_.count(b))
    throw Error(ErrorCode::unsupported, "vertex already drawn: " + b);

  Node& pa = nodes_.at(a);
  if (pos_a > pa.children.size())
    throw Error(ErrorCode::invalid_rotation_index,
                "rotation index out of range for " + a);

  AxisKind z = pa.primary;
  int zi = static_cast<int>(z);
  Node nb;
  nb.parent = a;
  nb.primary = flip(z);

  if (pa.children.empty()) {
    // First child fills the parent: inherit all four boundaries.
  } else if (pos_a > 0) {
    Node& c = nodes_.at(pa.children[pos_a - 1]);
    if (c.hi[zi]) {
      auto h = fresh(z, c.hi[zi]->handle, Side::after, delta);
      nb.lo[zi] = c.hi[zi];
      nb.hi[zi] = h;
      if (pos_a < pa.children.size()) {
        // Successor sibling sharing the split boundary moves onto the new
        // coordinate, keeping sibling interiors disjoint.
        Node& d = nodes_.at(pa.children[pos_a]);
        if (d.lo[zi] == c.hi[zi]) d.lo[zi] = h;
      }
    } else {
      // Predecessor reaches the parent's far boundary: detach it there,
      // the new sibling takes the strip between the cut and the parent.
      auto h = fresh(z, resolve_handle(a, z, true), Side::before, delta);
      c.hi[zi] = h;
      nb.lo[zi] = h;
    }
  } else {
    Node& c = nodes_.at(pa.children[0]);
    if (c.lo[zi]) {
      auto h = fresh(z, c.lo[zi]->handle, Side::before, delta);
      nb.hi[zi] = c.lo[zi];
      nb.lo[zi] = h;
    } else {
      auto h = fresh(z, resolve_handle(a, z, false), Side::after, delta);
      c.lo[zi] = h;
      nb.hi[zi] = h;
    }
  }

  nodes_.emplace(b, std::move(nb));
  order_.push_back(b);
  pa.children.insert(pa.children.begin() + static_cast<long>(pos_a), b);
  RectBounds rb = bounds_of(b);
  delta.placed.push_back(PlacedItem{b, Point{rb.left, rb.bottom}});
  return delta;
}

RectBounds TreemapDrawing::bounds_of(const std::string& v) const {
  return RectBounds{resolve(v, AxisKind::x, false),
                    resolve(v, AxisKind::x, true),
                    resolve(v, AxisKind::y, false),
                    resolve(v, AxisKind::y, true)};
}

std::vector<std::pair<std::string, RectBounds>> TreemapDrawing::rectangles()
    const {
  std::vector<std::pair<std::string, RectBounds>> out;
  out.reserve(order_.size());
  for (const auto& v : order_) out.emplace_back(v, bounds_of(v));
  return out;
}

const std::vector<std::string>& TreemapDrawing::children_of(
    const std::string& v) const {
  return nodes_.at(v).children;
}

AxisKind TreemapDrawing::primary_axis(const std::string& v) const {
  return nodes_.at(v).primary;
}

Label TreemapDrawing::max_x_label() const {
  const auto& m = axis(AxisKind::x).map.by_label();
  return m.empty() ? 0 : m.rbegin()->first;
}

Label TreemapDrawing::max_y_label() const {
  const auto& m = axis(AxisKind::y).map.by_label();
  return m.empty() ? 0 : m.rbegin()->first;
}

long long TreemapDrawing::area() const {
  if (root_.empty()) return 0;
  RectBounds b = bounds_of(root_);
  return std::max(b.right - b.left, 1LL) * std::max(b.top - b.bottom, 1LL);
}

}  // namespace fmdraw
