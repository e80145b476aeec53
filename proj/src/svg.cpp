#include "fmdraw/svg.hpp"

#include <algorithm>
#include <sstream>

namespace fmdraw {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  long long minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool any = false;

  void add(Point p) {
    if (!any) {
      minx = maxx = p.x;
      miny = maxy = p.y;
      any = true;
      return;
    }
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
};

constexpr long long kMargin = 2;

std::string header(const Box& b) {
  long long w = (b.any ? b.maxx - b.minx : 0) + 2 * kMargin;
  long long h = (b.any ? b.maxy - b.miny : 0) + 2 * kMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << " " << h << "\">\n";
  return out.str();
}

/// Straight-line drawing: edges as lines, vertices as labeled circles.
std::string line_drawing(
    const std::vector<Segment>& segs,
    std::vector<std::pair<std::string, Point>> verts) {
  Box b;
  for (const auto& s : segs) {
    b.add(s.a);
    b.add(s.b);
  }
  for (const auto& [name, p] : verts) b.add(p);
  std::sort(verts.begin(), verts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  auto ox = [&](long long x) { return x - b.minx + kMargin; };
  auto oy = [&](long long y) { return b.maxy - y + kMargin; };

  std::ostringstream out;
  out << header(b);
  out << "  <g stroke=\"black\" stroke-width=\"0.1\" "
         "stroke-linecap=\"round\">\n";
  for (const auto& s : segs)
    out << "    <line x1=\"" << ox(s.a.x) << "\" y1=\"" << oy(s.a.y)
        << "\" x2=\"" << ox(s.b.x) << "\" y2=\"" << oy(s.b.y) << "\"/>\n";
  out << "  </g>\n";
  out << "  <g fill=\"steelblue\">\n";
  for (const auto& [name, p] : verts)
    out << "    <circle cx=\"" << ox(p.x) << "\" cy=\"" << oy(p.y)
        << "\" r=\"0.3\"><title>" << xml_escape(name)
        << "</title></circle>\n";
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string svg_of(const TreeDrawing& d) {
  std::vector<std::pair<std::string, Point>> verts;
  for (const auto& v : d.vertices()) verts.emplace_back(v, d.position(v));
  return line_drawing(d.segments(), std::move(verts));
}

std::string svg_of(const OuterplanarDrawing& d) {
  std::vector<std::pair<std::string, Point>> verts;
  for (const auto& v : d.circle_order()) verts.emplace_back(v, d.position(v));
  return line_drawing(d.segments(), std::move(verts));
}

std::string svg_of(const TreemapDrawing& d) {
  auto rects = d.rectangles();
  Box b;
  for (const auto& [name, r] : rects) {
    b.add(Point{r.left, r.bottom});
    b.add(Point{r.right, r.top});
  }
  auto ox = [&](long long x) { return x - b.minx + kMargin; };
  auto oy = [&](long long y) { return b.maxy - y + kMargin; };

  std::ostringstream out;
  out << header(b);
  out << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"0.1\">\n";
  for (const auto& [name, r] : rects)
    out << "    <rect x=\"" << ox(r.left) << "\" y=\"" << oy(r.top)
        << "\" width=\"" << r.right - r.left << "\" height=\""
        << r.top - r.bottom << "\"><title>" << xml_escape(name)
        << "</title></rect>\n";
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string svg_of(const RunOutcome& o) {
  if (o.tree) return svg_of(*o.tree);
  if (o.treemap) return svg_of(*o.treemap);
  return svg_of(*o.outer);
}

}  // namespace fmdraw
