#include "fmdraw/convex_slots.hpp"

#include <algorithm>
#include <numeric>

namespace fmdraw {

namespace {

int half_plane(const Point& v) {
  return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

bool angle_less(const Point& a, const Point& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

}  // namespace

std::vector<Point> convex_grid_points(std::size_t m) {
  if (m < 3) m = 3;
  std::vector<Point> dirs;
  for (long long r = 1; dirs.size() < m; ++r) {
    dirs.clear();
    for (long long x = -r; x <= r; ++x)
      for (long long y = -r; y <= r; ++y) {
        if (x == 0 && y == 0) continue;
        if (std::gcd(std::llabs(x), std::llabs(y)) != 1) continue;
        dirs.push_back(Point{x, y});
      }
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);

  std::vector<Point> pts;
  pts.reserve(m);
  Point cur{0, 0};
  for (std::size_t i = 0; i < m; ++i) {
    pts.push_back(cur);
    cur.x += dirs[i].x;
    cur.y += dirs[i].y;
  }
  return pts;
}

bool strictly_convex(const std::vector<Point>& pts) {
  std::size_t n = pts.size();
  if (n < 3) return n > 0;
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int o = orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
    if (o == 0) return false;
    if (sign == 0) sign = o;
    else if (o != sign) return false;
  }
  return true;
}

}  // namespace fmdraw
