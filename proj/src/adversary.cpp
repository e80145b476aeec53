#include "fmdraw/adversary.hpp"

#include <algorithm>
#include <cstdlib>

namespace fmdraw {

namespace {

using I128 = __int128;

I128 cross2(Point a, Point b) {
  return I128(a.x) * b.y - I128(a.y) * b.x;
}

I128 dot2(Point a, Point b) { return I128(a.x) * b.x + I128(a.y) * b.y; }

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Point quarter_ccw(Point p) { return Point{-p.y, p.x}; }

Point turns(Point p, int k) {
  for (int i = 0; i < k; ++i) p = quarter_ccw(p);
  return p;
}

constexpr long long kSweepLimit = 1LL << 26;

}  // namespace

Point GreedyBaseline::place(const std::vector<Point>& children,
                            std::size_t pos) {
  const std::size_t n = children.size();
  Point a{}, b{};
  if (n > 0) {
    a = children[(pos + n - 1) % n];
    b = children[pos % n];
  }

  auto inside = [&](Point p) {
    if (p.x == 0 && p.y == 0) return false;
    if (n == 0) return true;
    if (n == 1) return !(cross2(a, p) == 0 && dot2(a, p) > 0);
    I128 cab = cross2(a, b);
    I128 cap = cross2(a, p);
    I128 cpb = cross2(p, b);
    if (cab > 0) return cap > 0 && cpb > 0;
    if (cab < 0) return cap > 0 || cpb > 0;
    return cap > 0;  // a, b opposite: the gap is an open half-plane
  };

  Point best{};
  long long best_d2 = -1;
  auto consider = [&](Point p) {
    long long d2 = p.x * p.x + p.y * p.y;
    if (best_d2 < 0 || d2 < best_d2 ||
        (d2 == best_d2 && (p.y > best.y || (p.y == best.y && p.x < best.x)))) {
      best = p;
      best_d2 = d2;
    }
  };

  for (long long r = 1; r <= 64; ++r) {
    if (best_d2 >= 0 && r * r >= best_d2) break;
    for (long long t = -r; t < r; ++t) {
      for (Point p : {Point{t, r}, Point{r, -t}, Point{-t, -r}, Point{-r, t}})
        if (inside(p)) consider(p);
    }
  }
  if (best_d2 >= 0) return best;

  // Nothing nearby: the gap is a thin wedge. Sweep lattice lines along its
  // dominant axis, rotated so the wedge points up.
  if (n < 2 || cross2(a, b) <= 0)
    throw Error(ErrorCode::invariant_breach, "greedy search exhausted");
  Point m{a.x + b.x, a.y + b.y};
  int rot = 0;
  while (rot < 4) {
    Point t = turns(m, rot);
    if (t.y >= std::llabs(t.x)) break;
    ++rot;
  }
  Point a2 = turns(a, rot), b2 = turns(b, rot);
  if (a2.y <= 0 || b2.y <= 0)
    throw Error(ErrorCode::invariant_breach, "greedy sweep needs a thin wedge");

  for (long long y = 1;; ++y) {
    if (best_d2 >= 0 && y * y >= best_d2) break;
    if (y > kSweepLimit)
      throw Error(ErrorCode::invariant_breach, "greedy sweep exceeded bounds");
    long long xlo = floor_div(y * b2.x, b2.y) + 1;      // strict right of b2
    long long xhi = floor_div(y * a2.x - 1, a2.y);      // strict left of a2
    for (long long x = xlo; x <= xhi; ++x)
      consider(turns(Point{x, y}, (4 - rot) % 4));
  }
  return best;
}

long long area_of(const std::vector<Point>& pts) {
  if (pts.empty()) return 0;
  long long xlo = pts[0].x, xhi = pts[0].x, ylo = pts[0].y, yhi = pts[0].y;
  for (const auto& p : pts) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  return std::max(xhi - xlo, 1LL) * std::max(yhi - ylo, 1LL);
}

AdversaryRun::AdversaryRun(NoMoveStrategy& strategy, AdversaryConfig cfg)
    : strat_(strategy), cfg_(cfg) {}

Point AdversaryRun::transformed(Point p) const { return turns(p, side_); }

Rational AdversaryRun::param(Point p) const {
  Point t = transformed(p);
  if (t.y <= 0)
    throw Error(ErrorCode::invariant_breach, "point outside the wedge cone");
  return Rational(t.x) / t.y;
}

long long AdversaryRun::area() const {
  std::vector<Point> all = children_;
  all.push_back(Point{0, 0});  // root
  return area_of(all);
}

void AdversaryRun::setup() {
  // 0 top, 1 right, 2 bottom, 3 left: side k is mapped to the top by k ccw
  // quarter turns.
  auto side_of = [](Point p) {
    if (p.y > 0 && p.y >= std::llabs(p.x)) return 0;
    if (p.x > 0 && p.x > std::llabs(p.y)) return 1;
    if (p.y < 0 && -p.y >= std::llabs(p.x)) return 2;
    return 3;
  };

  std::vector<int> hits(4, 0);
  for (int k = 0; k < 5; ++k) {
    std::size_t pos = children_.size();
    Point g = strat_.place(children_, pos);
    children_.insert(children_.begin() + static_cast<long>(pos), g);
    ++hits[side_of(g)];
    if (k >= 1 && *std::max_element(hits.begin(), hits.end()) >= 2) break;
  }
  auto it = std::find_if(hits.begin(), hits.end(), [](int h) { return h >= 2; });
  if (it == hits.end())
    throw Error(ErrorCode::invariant_breach, "no bounding-square side pierced twice");
  side_ = static_cast<int>(it - hits.begin());

  // Adjacent piercer pair with the smallest interval on that side.
  std::vector<std::pair<Rational, Point>> on_side;
  for (const auto& p : children_)
    if (side_of(p) == side_) on_side.emplace_back(param(p), p);
  std::sort(on_side.begin(), on_side.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::size_t pick = 0;
  for (std::size_t i = 1; i + 1 < on_side.size(); ++i)
    if (on_side[i + 1].first - on_side[i].first <
        on_side[pick + 1].first - on_side[pick].first)
      pick = i;
  e_ = on_side[pick].second;
  f_ = on_side[pick + 1].second;
  s_ = on_side[pick + 1].first - on_side[pick].first;
}

Point AdversaryRun::next_inside() {
  // In ccw rotation order f_ (larger param, smaller angle) immediately
  // precedes e_; the gap between them is the wedge interior.
  auto it = std::find(children_.begin(), children_.end(), e_);
  if (it == children_.end())
    throw Error(ErrorCode::invariant_breach, "wedge ray lost");
  std::size_t pos = static_cast<std::size_t>(it - children_.begin());
  std::size_t prev = (pos + children_.size() - 1) % children_.size();
  if (!(children_[prev] == f_))
    throw Error(ErrorCode::invariant_breach, "wedge rays not adjacent");

  Point g = strat_.place(children_, pos);
  Rational pg = param(g);
  if (!(param(e_) < pg && pg < param(f_)))
    throw Error(ErrorCode::invariant_breach, "strategy left the wedge");
  children_.insert(children_.begin() + static_cast<long>(pos), g);
  return g;
}

void AdversaryRun::phase1_round() {
  Point g = next_inside();
  Rational s1 = param(g) - param(e_);
  Rational s2 = param(f_) - param(g);
  if (s1 <= s2) {
    f_ = g;
    s_ = s1;
  } else {
    e_ = g;
    s_ = s2;
  }
  rounds_.push_back(AdversaryRound{1, s_, 0, area()});
}

std::size_t AdversaryRun::count_between(Point lo, Point hi) const {
  // Transformed-frame rays with param(lo) < param(hi): lattice points
  // strictly between them on lines 1..y_cap_.
  std::size_t total = 0;
  for (long long y = 1; y <= y_cap_; ++y) {
    long long xlo = floor_div(y * lo.x, lo.y) + 1;
    long long xhi = floor_div(y * hi.x - 1, hi.y);
    if (xhi >= xlo) total += static_cast<std::size_t>(xhi - xlo + 1);
  }
  return total;
}

void AdversaryRun::choose_cut_line() {
  // Lowest lattice line with enough wedge points below it to halve for a
  // while; the exact line L of the construction sits too far out once s has
  // collapsed past the round target.
  Point te = transformed(e_), tf = transformed(f_);
  y_cap_ = 1;
  for (;;) {
    points_ = count_between(te, tf);
    if (points_ >= cfg_.phase2_target_points || y_cap_ >= kSweepLimit) break;
    y_cap_ *= 2;
  }
  if (points_ == 0)
    throw Error(ErrorCode::invariant_breach, "empty wedge at phase switch");
  switch_round_ = rounds_.size();
}

void AdversaryRun::phase2_round() {
  std::size_t before = points_;
  Point g = next_inside();
  Point tg = transformed(g);
  std::size_t low = count_between(transformed(e_), tg);
  std::size_t high = count_between(tg, transformed(f_));
  if (low <= high) {
    points_ = low;
    f_ = g;
  } else {
    points_ = high;
    e_ = g;
  }
  if (points_ * 2 > before)
    throw Error(ErrorCode::invariant_breach, "lattice count failed to halve");
  s_ = param(f_) - param(e_);
  rounds_.push_back(AdversaryRound{2, s_, points_, area()});
}

void AdversaryRun::run() {
  setup();
  for (std::size_t i = 0; i < cfg_.phase1_rounds; ++i) phase1_round();
  choose_cut_line();
  while (points_ > 0) phase2_round();
  // No wedge lattice point is left below the cut line: forced far.
  next_inside();
  rounds_.push_back(AdversaryRound{2, s_, 0, area()});
}

}  // namespace fmdraw
