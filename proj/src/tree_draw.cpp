#include "fmdraw/tree_draw.hpp"

#include <algorithm>

namespace fmdraw {

TreeDrawing::TreeDrawing(Strategy s, LabelerConfig cfg)
    : strategy_(s), cfg_(cfg) {}

TreeDrawing::Level& TreeDrawing::level(int depth) {
  auto it = levels_.find(depth);
  if (it == levels_.end()) {
    it = levels_.emplace(depth, Level{}).first;
    it->second.labeler = make_labeler(strategy_, cfg_);
  }
  return it->second;
}

Point TreeDrawing::pos_of(const Vertex& v, const Level& lv) const {
  return Point{lv.map.label_of(v.handle) + lv.xoff,
               -static_cast<long long>(v.depth)};
}

Point TreeDrawing::position(const std::string& v) const {
  const auto& vx = verts_.at(v);
  return pos_of(vx, levels_.at(vx.depth));
}

int TreeDrawing::depth_of(const std::string& v) const {
  return verts_.at(v).depth;
}

void TreeDrawing::realize(Level& lv, const std::vector<RelabelOp>& ops,
                          DrawingDelta& delta) {
  long long y = 0;
  if (!lv.order.empty()) y = -verts_.at(lv.order.front()).depth;
  for (const auto& op : ops) {
    if (op.is_bulk()) {
      const auto& b = op.bulk();
      BulkGroup group;
      group.dx = b.delta;
      std::uint64_t covered = 0;
      for (auto it = lv.map.by_label().lower_bound(b.lo);
           it != lv.map.by_label().end() && it->first <= b.hi; ++it) {
        Point from{it->first + lv.xoff, y};
        group.points.push_back(from);
        delta.moved.push_back(MovedItem{lv.vert_of.at(it->second), from,
                                        Point{from.x + b.delta, y}});
        ++covered;
      }
      lv.map.apply(op);
      delta.bulk_groups.push_back(std::move(group));
      ++delta.bulks;
      delta.max_bulk_size = std::max(delta.max_bulk_size, covered);
    } else {
      const auto& s = op.single();
      delta.moved.push_back(
          MovedItem{lv.vert_of.at(s.handle.id),
                    Point{s.old_label + lv.xoff, y},
                    Point{s.new_label + lv.xoff, y}});
      lv.map.apply(op);
      ++delta.singles;
    }
  }
}

void TreeDrawing::place(const std::string& name, int depth,
                        ElementHandle anchor, Side side,
                        DrawingDelta& delta) {
  Level& lv = level(depth);
  auto res = lv.labeler->insert(anchor, side);
  realize(lv, res.relabels, delta);
  lv.map.place(res.handle, res.assigned);
  lv.vert_of[res.handle.id] = name;

  Vertex vx;
  vx.depth = depth;
  vx.handle = res.handle;
  if (anchor.is_null()) {
    vx.level_pos = lv.order.insert(lv.order.end(), name);
  } else {
    auto at = verts_.at(lv.vert_of.at(anchor.id)).level_pos;
    if (side == Side::after) ++at;
    vx.level_pos = lv.order.insert(at, name);
  }
  verts_.emplace(name, std::move(vx));
  delta.placed.push_back(PlacedItem{name, position(name)});
}

DrawingDelta TreeDrawing::insert_edge(const std::string& a,
                                      const std::string& b,
                                      std::size_t pos_a) {
  DrawingDelta delta;

  if (!verts_.empty() && !verts_.count(a) && b == root_) {
    // Root grows upward: new level above, frame pinned so nothing moves.
    int depth = verts_.at(b).depth - 1;
    Level& lv = level(depth);
    Point rpos = position(b);
    auto res = lv.labeler->insert(kNullAnchor, Side::after);
    lv.map.place(res.handle, res.assigned);
    lv.vert_of[res.handle.id] = a;
    lv.xoff = rpos.x - res.assigned;

    Vertex vx;
    vx.depth = depth;
    vx.handle = res.handle;
    vx.children.push_back(b);
    vx.level_pos = lv.order.insert(lv.order.end(), a);
    verts_.emplace(a, std::move(vx));
    verts_.at(b).parent = a;
    root_ = a;
    edges_.emplace_back(a, b);
    delta.placed.push_back(PlacedItem{a, Point{rpos.x, rpos.y + 1}});
    return delta;
  }

  if (verts_.empty()) {
    place(a, 0, kNullAnchor, Side::after, delta);
    Level& lv0 = levels_.at(0);
    lv0.xoff = -lv0.map.label_of(verts_.at(a).handle);
    delta.placed.back().at = Point{0, 0};
    root_ = a;
  }
  if (!verts_.count(a))
    throw Error(ErrorCode::disconnected_stream, "unknown vertex: " + a);
  if (verts_.count(b))
    throw Error(ErrorCode::unsupported, "vertex already drawn: " + b);

  Vertex& pa = verts_.at(a);
  if (pos_a > pa.children.size())
    throw Error(ErrorCode::invalid_rotation_index,
                "rotation index out of range for " + a);

  int k = pa.depth + 1;
  ElementHandle anchor = kNullAnchor;
  Side side = Side::after;
  if (pos_a > 0) {
    anchor = verts_.at(pa.children[pos_a - 1]).handle;
    side = Side::after;
  } else if (!pa.children.empty()) {
    anchor = verts_.at(pa.children[0]).handle;
    side = Side::before;
  } else {
    // No siblings: nearest level-k vertex under a neighboring parent.
    const Level& up = levels_.at(pa.depth);
    auto fwd = std::next(pa.level_pos);
    auto rev = std::make_reverse_iterator(pa.level_pos);
    for (; rev != up.order.rend(); ++rev) {
      const auto& ch = verts_.at(*rev).children;
      if (!ch.empty()) {
        anchor = verts_.at(ch.back()).handle;
        side = Side::after;
        break;
      }
    }
    if (anchor.is_null()) {
      for (; fwd != up.order.end(); ++fwd) {
        const auto& ch = verts_.at(*fwd).children;
        if (!ch.empty()) {
          anchor = verts_.at(ch.front()).handle;
          side = Side::before;
          break;
        }
      }
    }
  }

  place(b, k, anchor, side, delta);
  pa.children.insert(pa.children.begin() + static_cast<long>(pos_a), b);
  verts_.at(b).parent = a;
  edges_.emplace_back(a, b);
  return delta;
}

std::vector<Segment> TreeDrawing::segments() const {
  std::vector<Segment> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_)
    out.push_back(Segment{position(u), position(v)});
  return out;
}

std::vector<std::string> TreeDrawing::level_order(int depth) const {
  auto it = levels_.find(depth);
  if (it == levels_.end()) return {};
  return {it->second.order.begin(), it->second.order.end()};
}

std::vector<int> TreeDrawing::levels() const {
  std::vector<int> out;
  for (const auto& [d, lv] : levels_)
    if (!lv.order.empty()) out.push_back(d);
  return out;
}

const std::vector<std::string>& TreeDrawing::children_of(
    const std::string& v) const {
  return verts_.at(v).children;
}

const std::string& TreeDrawing::parent_of(const std::string& v) const {
  return verts_.at(v).parent;
}

std::vector<std::string> TreeDrawing::vertices() const {
  std::vector<std::string> out;
  out.reserve(verts_.size());
  for (const auto& [name, vx] : verts_) out.push_back(name);
  return out;
}

Label TreeDrawing::max_label() const {
  Label m = 0;
  for (const auto& [depth, lv] : levels_)
    if (!lv.map.by_label().empty())
      m = std::max(m, lv.map.by_label().rbegin()->first);
  return m;
}

long long TreeDrawing::area() const {
  if (verts_.empty()) return 0;
  long long xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  bool first = true;
  for (const auto& [name, vx] : verts_) {
    Point p = pos_of(vx, levels_.at(vx.depth));
    if (first) {
      xlo = xhi = p.x;
      ylo = yhi = p.y;
      first = false;
    } else {
      xlo = std::min(xlo, p.x);
      xhi = std::max(xhi, p.x);
      ylo = std::min(ylo, p.y);
      yhi = std::max(yhi, p.y);
    }
  }
  return std::max(xhi - xlo, 1LL) * std::max(yhi - ylo, 1LL);
}

}  // namespace fmdraw
