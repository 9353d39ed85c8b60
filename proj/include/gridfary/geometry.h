#ifndef GRIDFARY_GEOMETRY_H
#define GRIDFARY_GEOMETRY_H

#include <algorithm>

#include "gridfary/exact.h"

namespace gridfary {

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

inline int128 cross_128(long long ax, long long ay, long long bx, long long by) {
  return static_cast<int128>(ax) * by - static_cast<int128>(ay) * bx;
}

/// Sign of the cross product of (b-a) and (c-a): +1 left turn, -1 right turn.
inline int orient(Point a, Point b, Point c) {
  return sign_of(cross_128(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y));
}

inline uint128 squared_distance(Point a, Point b) {
  int128 dx = b.x - a.x;
  int128 dy = b.y - a.y;
  return static_cast<uint128>(dx * dx) + static_cast<uint128>(dy * dy);
}

/// True iff p lies on the closed segment ab (including endpoints).
inline bool on_segment(Point a, Point b, Point p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace gridfary

#endif
