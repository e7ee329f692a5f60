#include "cmcflat/planar.hpp"

#include <algorithm>

namespace cmcflat::planar {

namespace {

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

bool lex_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// p on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

std::optional<Point> segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point r = b - a;
  const Point s = d - c;
  const Rational denom = cross(r, s);
  if (denom.is_zero()) {
    for (const Point& p : {c, d})
      if (on_segment(a, b, p)) return p;
    for (const Point& p : {a, b})
      if (on_segment(c, d, p)) return p;
    return std::nullopt;
  }
  const Rational t = cross(c - a, s) / denom;
  const Rational u = cross(c - a, r) / denom;
  if (t < Rational(0) || t > Rational(1) || u < Rational(0) || u > Rational(1)) return std::nullopt;
  return a + t * r;
}

std::vector<std::pair<Point, Point>> edges(const std::vector<Point>& hull) {
  std::vector<std::pair<Point, Point>> out;
  if (hull.size() == 2) out.emplace_back(hull[0], hull[1]);
  if (hull.size() >= 3)
    for (std::size_t i = 0; i < hull.size(); ++i) out.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
  return out;
}

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a).sign(); }

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // All collinear: the chain degenerates to the two extreme points.
  if (hull.size() < 3) return {pts.front(), pts.back()};
  return hull;
}

bool hull_contains(const std::vector<Point>& hull, const Point& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (orient(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  return true;
}

std::optional<Point> hull_intersection(const std::vector<Point>& p, const std::vector<Point>& q) {
  for (const Point& v : p)
    if (hull_contains(q, v)) return v;
  for (const Point& v : q)
    if (hull_contains(p, v)) return v;
  for (const auto& [a, b] : edges(p))
    for (const auto& [c, d] : edges(q))
      if (auto x = segment_intersection(a, b, c, d)) return x;
  return std::nullopt;
}

std::optional<Combination> positive_combination(const std::vector<Point>& pts, const Point& x) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    if (pts[i] == x) return Combination{{i}, {Rational(1)}};

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point d = pts[j] - pts[i];
      if (d.x.is_zero() && d.y.is_zero()) continue;
      if (orient(pts[i], pts[j], x) != 0) continue;
      const Point off = x - pts[i];
      // x = pts[i] + t d with 0 < t < 1.
      const Rational t = !d.x.is_zero() ? off.x / d.x : off.y / d.y;
      if (t > Rational(0) && t < Rational(1)) return Combination{{i, j}, {Rational(1) - t, t}};
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational area = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (area.is_zero()) continue;
        const Rational wi = cross(pts[j] - x, pts[k] - x) / area;
        const Rational wj = cross(pts[k] - x, pts[i] - x) / area;
        const Rational wk = Rational(1) - wi - wj;
        if (wi.sign() > 0 && wj.sign() > 0 && wk.sign() > 0) return Combination{{i, j, k}, {wi, wj, wk}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace cmcflat::planar
