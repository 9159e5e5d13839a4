#include "twhad/geometry.hpp"

#include <stdexcept>
#include <string>

#include "twhad/errors.hpp"

namespace twh {

namespace {

constexpr long long kCoordCap = 10000;

int sign_i128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct Diff {
  long long num, den;  // den > 0
};

Diff diff(const Rational& a, const Rational& b) {  // a - b
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

}  // namespace

void check_coordinate_range(const Point& p) {
  auto bad = [](const Rational& r) {
    return r.num > kCoordCap || r.num < -kCoordCap || r.den > kCoordCap;
  };
  if (bad(p.x) || bad(p.y))
    throw ValidationError("coordinate " + p.x.str() + "," + p.y.str() +
                          " outside the supported range (|num|, den <= 10^4)");
}

int orientation(const Point& a, const Point& b, const Point& c) {
  Diff x1 = diff(b.x, a.x), y1 = diff(b.y, a.y);
  Diff x2 = diff(c.x, a.x), y2 = diff(c.y, a.y);
  // sign of x1*y2 - y1*x2 over positive denominators
  __int128 lhs = (__int128)x1.num * y2.num * y1.den * x2.den;
  __int128 rhs = (__int128)y1.num * x2.num * x1.den * y2.den;
  return sign_i128(lhs - rhs);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  auto between = [](const Rational& lo, const Rational& hi, const Rational& v) {
    if (lo <= hi) return lo <= v && v <= hi;
    return hi <= v && v <= lo;
  };
  return between(a.x, b.x, p.x) && between(a.y, b.y, p.y);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2) {
  int d1 = orientation(q1, q2, p1);
  int d2 = orientation(q1, q2, p2);
  int d3 = orientation(p1, p2, q1);
  int d4 = orientation(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

bool polylines_intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
  for (size_t i = 0; i + 1 < a.size(); ++i)
    for (size_t j = 0; j + 1 < b.size(); ++j)
      if (segments_intersect(a[i], a[i + 1], b[j], b[j + 1])) return true;
  return false;
}

int unit_circle_side(const Point& p) {
  // x^2 + y^2 - 1, sign only
  __int128 xx = (__int128)p.x.num * p.x.num * p.y.den * p.y.den;
  __int128 yy = (__int128)p.y.num * p.y.num * p.x.den * p.x.den;
  __int128 dd = (__int128)p.x.den * p.x.den * p.y.den * p.y.den;
  return sign_i128(xx + yy - dd);
}

bool ccw_angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) {
    // 0: upper half plane including the positive x-axis; 1: the rest
    if (p.y.sign() > 0) return 0;
    if (p.y.sign() == 0 && p.x.sign() > 0) return 0;
    return 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  // same half: a before b iff a x b > 0
  __int128 lhs = (__int128)a.x.num * b.y.num * a.y.den * b.x.den;
  __int128 rhs = (__int128)a.y.num * b.x.num * a.x.den * b.y.den;
  return lhs > rhs;
}

}  // namespace twh
