#include "fmdraw/geometry.hpp"

#include <algorithm>

namespace fmdraw {

int orientation(const Point& a, const Point& b, const Point& c) {
  __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
               static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

bool on_segment(const Segment& s, const Point& p) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

namespace {

bool is_shared_endpoint(const Point& p, const Segment& s) {
  return p == s.a || p == s.b;
}

}  // namespace

bool segments_conflict(const Segment& s, const Segment& t) {
  int o1 = orientation(s.a, s.b, t.a);
  int o2 = orientation(s.a, s.b, t.b);
  int o3 = orientation(t.a, t.b, s.a);
  int o4 = orientation(t.a, t.b, s.b);

  if (o1 != o2 && o3 != o4) {
    // They intersect in exactly one point; allowed only if it is a shared
    // endpoint of both.
    bool shared = (is_shared_endpoint(s.a, t) && (o3 == 0)) ||
                  (is_shared_endpoint(s.b, t) && (o4 == 0));
    return !shared;
  }

  // Collinear / touching cases: any on-segment point that is not a shared
  // endpoint of both segments is a conflict.
  const Point* cand[4] = {&t.a, &t.b, &s.a, &s.b};
  const Segment* host[4] = {&s, &s, &t, &t};
  const Segment* owner[4] = {&t, &t, &s, &s};
  for (int i = 0; i < 4; ++i) {
    if (!on_segment(*host[i], *cand[i])) continue;
    if (is_shared_endpoint(*cand[i], *host[i]) &&
        is_shared_endpoint(*cand[i], *owner[i]))
      continue;
    return true;
  }
  return false;
}

std::vector<PlanarityViolation> planarity_audit(
    const std::vector<Segment>& segs) {
  std::vector<PlanarityViolation> out;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (segments_conflict(segs[i], segs[j])) out.push_back({i, j});
  return out;
}

std::vector<PlanarityViolation> planarity_audit_incremental(
    const std::vector<Segment>& segs,
    const std::vector<std::size_t>& changed) {
  std::vector<bool> is_changed(segs.size(), false);
  for (auto i : changed)
    if (i < segs.size()) is_changed[i] = true;
  std::vector<PlanarityViolation> out;
  for (auto i : changed) {
    if (i >= segs.size()) continue;
    for (std::size_t j = 0; j < segs.size(); ++j) {
      if (j == i) continue;
      if (is_changed[j] && j < i) continue;  // pair already handled
      if (segments_conflict(segs[i], segs[j]))
        out.push_back({std::min(i, j), std::max(i, j)});
    }
  }
  return out;
}

}  // namespace fmdraw
