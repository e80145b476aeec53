#include "fmdraw/audits.hpp"

#include <unordered_map>

#include "fmdraw/geometry.hpp"

namespace fmdraw {

std::vector<std::string> audit_tree(const TreeDrawing& d) {
  std::vector<std::string> out;

  auto segs = d.segments();
  for (const auto& v : planarity_audit(segs)) {
    const auto& e1 = d.edges()[v.first];
    const auto& e2 = d.edges()[v.second];
    out.push_back("planarity: edges " + e1.first + "-" + e1.second + " and " +
                  e2.first + "-" + e2.second + " conflict");
  }

  for (const auto& [u, v] : d.edges()) {
    if (d.position(v).y != d.position(u).y - 1)
      out.push_back("upwardness: edge " + u + "-" + v +
                    " spans more than one level");
  }

  std::unordered_map<std::string, std::size_t> level_pos;
  for (int k : d.levels()) {
    auto order = d.level_order(k);
    for (std::size_t i = 0; i < order.size(); ++i) level_pos[order[i]] = i;
    for (std::size_t i = 1; i < order.size(); ++i)
      if (d.position(order[i - 1]).x >= d.position(order[i]).x)
        out.push_back("level order: " + order[i - 1] + " not left of " +
                      order[i]);
  }

  for (const auto& v : d.vertices()) {
    const auto& kids = d.children_of(v);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      std::size_t expect = level_pos.at(kids[0]) + i;
      if (level_pos.at(kids[i]) != expect) {
        out.push_back("sibling order: children of " + v +
                      " not contiguous in rotation order");
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> audit_treemap(const TreemapDrawing& d) {
  std::vector<std::string> out;
  auto rects = d.rectangles();

  for (const auto& [name, b] : rects)
    if (b.left >= b.right || b.bottom >= b.top)
      out.push_back("degenerate rectangle: " + name);

  for (const auto& [name, b] : rects) {
    const auto& kids = d.children_of(name);
    bool along_x = d.primary_axis(name) == AxisKind::x;

    for (const auto& kid : kids) {
      auto kb = d.bounds_of(kid);
      if (kb.left < b.left || kb.right > b.right || kb.bottom < b.bottom ||
          kb.top > b.top)
        out.push_back("containment: " + kid + " outside " + name);
    }

    for (std::size_t i = 0; i < kids.size(); ++i) {
      auto bi = d.bounds_of(kids[i]);
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        auto bj = d.bounds_of(kids[j]);
        bool disjoint = bi.right <= bj.left || bj.right <= bi.left ||
                        bi.top <= bj.bottom || bj.top <= bi.bottom;
        if (!disjoint)
          out.push_back("disjointness: " + kids[i] + " overlaps " + kids[j]);
      }
      if (i + 1 < kids.size()) {
        auto bn = d.bounds_of(kids[i + 1]);
        bool ordered =
            along_x ? bi.right <= bn.left : bi.top <= bn.bottom;
        if (!ordered)
          out.push_back("order: " + kids[i] + " not before " + kids[i + 1] +
                        " along primary axis of " + name);
      }
    }
  }
  return out;
}

std::vector<std::string> audit_outerplanar(const OuterplanarDrawing& d) {
  std::vector<std::string> out;

  auto segs = d.segments();
  for (const auto& v : planarity_audit(segs)) {
    const auto& e1 = d.edges()[v.first];
    const auto& e2 = d.edges()[v.second];
    out.push_back("planarity: edges " + e1.first + "-" + e1.second + " and " +
                  e2.first + "-" + e2.second + " conflict");
  }

  std::vector<std::string> walk;
  try {
    walk = d.outer_walk();
  } catch (const Error& e) {
    out.push_back(std::string("outer face: ") + e.what());
    return out;
  }
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& v : walk) ++seen[v];
  for (const auto& v : d.circle_order()) {
    auto it = seen.find(v);
    if (it == seen.end())
      out.push_back("outer face: vertex " + v + " missing from walk");
    else if (it->second > d.degree(v))
      out.push_back("outer face: vertex " + v + " appears more than deg times");
  }

  // Drawn positions in circular order must be strictly convex.
  auto order = d.circle_order();
  if (order.size() >= 3) {
    std::size_t n = order.size();
    int want = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Point a = d.position(order[i]);
      Point b = d.position(order[(i + 1) % n]);
      Point c = d.position(order[(i + 2) % n]);
      int o = orientation(a, b, c);
      if (want == 0) want = o;
      if (o == 0 || o != want) {
        out.push_back("convexity: turn at " + order[(i + 1) % n] +
                      " breaks strict convex position");
      }
    }
  }
  return out;
}

}  // namespace fmdraw
