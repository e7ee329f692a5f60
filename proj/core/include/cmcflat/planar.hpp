#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cmcflat/rational.hpp"

namespace cmcflat::planar {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& k, const Point& p) { return {k * p.x, k * p.y}; }
  Point operator-() const { return {-x, -y}; }
};

/// Sign of the cross product (b - a) x (c - a).
int orient(const Point& a, const Point& b, const Point& c);

/// Convex hull in counter-clockwise order without collinear vertices.
/// Degenerate inputs give one vertex (all equal) or two (collinear).
std::vector<Point> convex_hull(std::vector<Point> pts);

/// Closed membership in the convex polygon returned by convex_hull.
bool hull_contains(const std::vector<Point>& hull, const Point& p);

/// Some point of conv(P) intersected with conv(Q), both given as hulls.
std::optional<Point> hull_intersection(const std::vector<Point>& p, const std::vector<Point>& q);

/// A combination of at most three input points with strictly positive
/// weights summing to one that equals x. Singletons are tried first, then
/// pairs, then triples, each in index order.
struct Combination {
  std::vector<std::size_t> indices;
  std::vector<Rational> weights;
};

std::optional<Combination> positive_combination(const std::vector<Point>& pts, const Point& x);

}  // namespace cmcflat::planar
