#pragma once

#include <vector>

#include "twhad/rational.hpp"

namespace twh {

// Exact rational plane geometry. Coordinates are capped at |num|, den
// <= 10^4 so every predicate below fits in 128-bit intermediates.
struct Point {
  Rational x, y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

void check_coordinate_range(const Point& p);

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right
// turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p);

// Closed segments share at least one point (proper crossing, touching, or
// collinear overlap).
bool segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2);

bool polylines_intersect(const std::vector<Point>& a, const std::vector<Point>& b);

// |p|^2 compared against 1: -1 inside the unit circle, 0 on it, +1 outside.
int unit_circle_side(const Point& p);

// Counter-clockwise angular order around the origin starting just above
// the positive x-axis; total for distinct directions.
bool ccw_angle_less(const Point& a, const Point& b);

}  // namespace twh
