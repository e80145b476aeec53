#include "fmdraw/outerplanar_draw.hpp"

#include <algorithm>
#include <set>

namespace fmdraw {

namespace {

/// Indices in `w` where vertex `v` has a corner.
std::vector<std::size_t> occurrences(const FaceWalk& w, const std::string& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].v == v) out.push_back(i);
  return out;
}

bool walk_has(const FaceWalk& w, const Corner& c, std::size_t* idx) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == c) {
      *idx = i;
      return true;
    }
  return false;
}

/// Face contains the directed edge u->v.
bool has_directed(const FaceWalk& w, const std::string& u,
                  const std::string& v) {
  for (const auto& c : w)
    if (c.v == v && c.in == u) return true;
  return false;
}

}  // namespace

OuterplanarDrawing::OuterplanarDrawing(Strategy s, LabelerConfig cfg) {
  if (s != Strategy::oracle && s != Strategy::packed &&
      s != Strategy::bulk_packed)
    throw Error(ErrorCode::unsupported,
                "outerplanar drawing needs an erase-capable labeler "
                "(oracle, packed or bulkpacked)");
  lab_ = make_labeler(s, cfg);
  ensure_slots();
}

void OuterplanarDrawing::apply_ops(const std::vector<RelabelOp>& ops,
                                   DrawingDelta& delta) {
  for (const auto& op : ops) {
    if (op.is_bulk()) {
      const auto& b = op.bulk();
      std::uint64_t covered = map_.count_in(b.lo, b.hi);
      delta.max_bulk_size = std::max(delta.max_bulk_size, covered);
      ++delta.bulks;
    } else {
      ++delta.singles;
    }
    map_.apply(op);
  }
}

void OuterplanarDrawing::ensure_slots() {
  auto need = static_cast<std::size_t>(lab_->label_space()) + 1;
  if (slots_.size() >= need && !slots_.empty()) return;
  std::size_t m = std::max<std::size_t>({need, slots_.size() * 2, 8});
  slots_ = convex_grid_points(m);
}

Point OuterplanarDrawing::position(const std::string& v) const {
  Label l = map_.label_of(verts_.at(v).handle);
  return slots_.at(static_cast<std::size_t>(l));
}

std::vector<Segment> OuterplanarDrawing::segments() const {
  std::vector<Segment> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_)
    out.push_back(Segment{position(u), position(v)});
  return out;
}

std::vector<std::string> OuterplanarDrawing::circle_order() const {
  std::vector<std::string> out;
  for (const auto& [label, id] : map_.by_label())
    out.push_back(vert_of_.at(id));
  return out;
}

std::vector<std::string> OuterplanarDrawing::outer_walk() const {
  std::vector<std::string> out;
  for (const auto& c : outer_face_order(rot_)) out.push_back(c.v);
  return out;
}

std::uint64_t OuterplanarDrawing::moves_of(const std::string& v) const {
  auto it = moves_.find(v);
  return it == moves_.end() ? 0 : it->second;
}

std::uint64_t OuterplanarDrawing::total_moves() const {
  std::uint64_t sum = 0;
  for (const auto& [v, m] : moves_) sum += m;
  return sum;
}

Label OuterplanarDrawing::max_label() const {
  if (map_.by_label().empty()) return 0;
  return map_.by_label().rbegin()->first;
}

long long OuterplanarDrawing::area() const {
  if (verts_.empty()) return 0;
  long long xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  bool first = true;
  for (const auto& [name, vx] : verts_) {
    Point p = position(name);
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

ElementHandle OuterplanarDrawing::seat_after(ElementHandle prev,
                                             const std::string& v,
                                             DrawingDelta& delta) {
  auto res = prev.is_null() ? lab_->insert(kNullAnchor, Side::after)
                            : lab_->insert_after(prev);
  apply_ops(res.relabels, delta);
  map_.place(res.handle, res.assigned);
  vert_of_[res.handle.id] = v;
  return res.handle;
}

const FaceWalk& OuterplanarDrawing::choose_outer(
    const std::vector<FaceWalk>& candidates, const std::string& p,
    const std::string& q, const std::optional<SideHint>& hint) const {
  if (candidates.size() == 1) return candidates.front();
  if (!hint)
    throw Error(ErrorCode::ambiguous_insertion,
                "rotation order does not pin the side of edge " + p + "-" + q);
  if (!hint->ref.empty() && !rot_.has_vertex(hint->ref))
    throw Error(ErrorCode::ambiguous_insertion,
                "hint references unknown vertex " + hint->ref);
  for (const auto& f : candidates) {
    bool fwd = has_directed(f, p, q);
    if (fwd == hint->left) return f;
  }
  return candidates.front();
}

DrawingDelta OuterplanarDrawing::insert_edge(const std::string& p_in,
                                             const std::string& q_in,
                                             std::size_t pos_p,
                                             std::size_t pos_q,
                                             std::optional<SideHint> hint) {
  DrawingDelta delta;
  std::string p = p_in, q = q_in;

  if (!verts_.empty() && !verts_.count(p) && !verts_.count(q))
    throw Error(ErrorCode::disconnected_stream,
                "neither endpoint of " + p + "-" + q + " is drawn");
  if (!verts_.empty() && !verts_.count(p)) {
    std::swap(p, q);
    std::swap(pos_p, pos_q);
    if (hint) hint->left = !hint->left;  // side is relative to p->q
  }

  // Trial embedding; committed only once the edge is accepted.
  RotationGraph trial = rot_;
  trial.insert_edge(p, q, pos_p, pos_q);

  auto all = trial.vertices();
  std::vector<FaceWalk> candidates;
  for (auto& f : trial.faces()) {
    std::set<std::string> seen;
    for (const auto& c : f) seen.insert(c.v);
    if (seen.size() == all.size()) candidates.push_back(std::move(f));
  }
  if (candidates.empty())
    throw Error(ErrorCode::not_outerplanar,
                "edge " + p + "-" + q + " leaves no face touching all vertices");
  const FaceWalk& W = choose_outer(candidates, p, q, hint);

  // Snapshot for delta reporting.
  std::unordered_map<std::string, Point> before;
  for (const auto& [name, vx] : verts_) before.emplace(name, position(name));

  // Re-anchor: a vertex stays put when its anchored corner survives in W;
  // p and q may re-anchor to a half of their split corner for free.
  struct Plan {
    std::string v;
    std::size_t idx = 0;      // anchor position in W
    bool stationary = true;
    bool fresh = false;
  };
  std::vector<Plan> plans;
  for (const auto& name : all) {
    Plan pl;
    pl.v = name;
    auto vit = verts_.find(name);
    if (vit == verts_.end()) {
      pl.fresh = true;
      pl.stationary = false;
      auto occ = occurrences(W, name);
      pl.idx = occ.front();
    } else if (walk_has(W, vit->second.anchor, &pl.idx)) {
      // untouched corner
    } else if (name == p || name == q) {
      const std::string& other = name == p ? q : p;
      Corner a = vit->second.anchor;
      Corner half1{name, a.in, other};
      Corner half2{name, other, a.out};
      if (!walk_has(W, half1, &pl.idx) && !walk_has(W, half2, &pl.idx)) {
        pl.stationary = false;
        auto occ = occurrences(W, name);
        if (occ.empty())
          throw Error(ErrorCode::not_outerplanar,
                      "vertex " + name + " would be enclosed");
        pl.idx = occ.front();
      }
    } else {
      pl.stationary = false;
      auto occ = occurrences(W, name);
      if (occ.empty())
        throw Error(ErrorCode::not_outerplanar,
                    "vertex " + name + " would be enclosed");
      pl.idx = occ.front();
    }
    plans.push_back(std::move(pl));
  }

  std::sort(plans.begin(), plans.end(),
            [](const Plan& a, const Plan& b) { return a.idx < b.idx; });

  // Rotate so processing starts at a stationary vertex.
  std::size_t start = plans.size();
  for (std::size_t i = 0; i < plans.size(); ++i)
    if (plans[i].stationary) {
      start = i;
      break;
    }
  if (start == plans.size() && !verts_.empty()) {
    // The insertion flips the whole drawing to the other side of the outer
    // face and every anchor was wiped. Hold one drawn vertex in place and
    // re-seat the rest around it; the circular order stays consistent.
    for (std::size_t i = 0; i < plans.size(); ++i)
      if (!plans[i].fresh) {
        plans[i].stationary = true;
        start = i;
        break;
      }
    if (start == plans.size())
      throw Error(ErrorCode::invariant_breach, "no stationary scaffold vertex");
  }

  // Commit.
  rot_ = std::move(trial);
  if (verts_.empty()) {
    // Bootstrap: both endpoints fresh, seated in walk order.
    ElementHandle hp = seat_after(kNullAnchor, p, delta);
    verts_[p] = Vert{hp, Corner{}};
    ElementHandle hq = seat_after(hp, q, delta);
    verts_[q] = Vert{hq, Corner{}};
  } else {
    ElementHandle prev = verts_.at(plans[start].v).handle;
    for (std::size_t k = 1; k < plans.size(); ++k) {
      Plan& pl = plans[(start + k) % plans.size()];
      if (pl.stationary) {
        prev = verts_.at(pl.v).handle;
        continue;
      }
      ElementHandle fresh_handle = seat_after(prev, pl.v, delta);
      if (pl.fresh) {
        verts_[pl.v] = Vert{fresh_handle, Corner{}};
      } else {
        ElementHandle old = verts_.at(pl.v).handle;
        map_.remove(old);
        vert_of_.erase(old.id);
        auto ops = lab_->erase(old);
        apply_ops(ops, delta);
        verts_.at(pl.v).handle = fresh_handle;
        ++moves_[pl.v];
      }
      prev = fresh_handle;
    }
  }

  // Record the walk corners as the new anchors.
  for (const auto& pl : plans) verts_.at(pl.v).anchor = W[pl.idx];
  if (verts_.size() == 2 && edges_.empty()) {
    // Bootstrap anchors come straight from the only walk.
    for (const auto& c : W) verts_.at(c.v).anchor = c;
  }

  ensure_slots();
  edges_.emplace_back(p, q);

  // Scaffold consistency: circle order must equal anchored-corner order.
  {
    std::vector<std::pair<std::size_t, std::string>> want;
    for (const auto& pl : plans) want.emplace_back(pl.idx, pl.v);
    std::sort(want.begin(), want.end());
    auto got = circle_order();
    // Align circularly on the first wanted vertex.
    auto at = std::find(got.begin(), got.end(), want.front().second);
    if (at == got.end())
      throw Error(ErrorCode::invariant_breach, "vertex missing from circle");
    std::rotate(got.begin(), at, got.end());
    for (std::size_t i = 0; i < want.size(); ++i)
      if (got[i] != want[i].second)
        throw Error(ErrorCode::invariant_breach,
                    "circle order diverged from outer walk");
  }

  for (const auto& [name, vx] : verts_) {
    Point now = position(name);
    auto bit = before.find(name);
    if (bit == before.end())
      delta.placed.push_back(PlacedItem{name, now});
    else if (!(bit->second == now))
      delta.moved.push_back(MovedItem{name, bit->second, now});
  }
  return delta;
}

}  // namespace fmdraw
