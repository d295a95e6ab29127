#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>

#include "maxdist/error.hpp"

namespace maxdist {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator+(const Point& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
constexpr Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Squared Euclidean distance. Every distance comparison in the library goes
/// through this one expression so results can be compared bit-for-bit.
constexpr double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// An oriented line through `base` with direction `dir`.
struct OrientedEdge {
  Point base;
  Vec2 dir;

  static constexpr OrientedEdge through(const Point& from, const Point& to) { return {from, to - from}; }
};

/// Outer product v ^ (p - base); positive iff p is strictly left of the edge.
constexpr double outer_product(const OrientedEdge& edge, const Point& p) {
  return edge.dir.x * (p.y - edge.base.y) - edge.dir.y * (p.x - edge.base.x);
}

/// Sign of orient(a, b, c) when floating-point evaluation can certify it,
/// 0 when the determinant is zero or too close to zero to tell.
///
/// Uses the static error bound of Shewchuk's orient2d filter, so a nonzero
/// return is the sign of the exact determinant of the given doubles.
inline int certain_orientation(const Point& a, const Point& b, const Point& c) {
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2.0;
  constexpr double err_factor = (3.0 + 16.0 * eps) * eps;
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double bound = err_factor * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return 0;
}

struct Aabb {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  constexpr double width() const { return x_max - x_min; }
  constexpr double height() const { return y_max - y_min; }
  constexpr Point center() const { return {(x_min + x_max) / 2.0, (y_min + y_max) / 2.0}; }
  constexpr bool degenerate() const { return !(width() > 0.0) || !(height() > 0.0); }

  constexpr bool contains(const Point& p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  /// Counter-clockwise from the top-right corner.
  constexpr std::array<Point, 4> corners() const {
    return {Point{x_max, y_max}, Point{x_min, y_max}, Point{x_min, y_min}, Point{x_max, y_min}};
  }

  friend constexpr bool operator==(const Aabb&, const Aabb&) = default;
};

inline constexpr int kSectorCount = 8;

/// Precomputed center and half-extent reciprocals of a non-degenerate box;
/// the hot loops of the polar phase evaluate angles through this.
class PolarFrame {
 public:
  explicit PolarFrame(const Aabb& box) : box_(box), center_(box.center()) {
    if (box.degenerate()) {
      throw Error(Errc::degenerate_aabb, "bounding box has zero width or height");
    }
    inv_half_w_ = 2.0 / box.width();
    inv_half_h_ = 2.0 / box.height();
  }

  const Aabb& box() const { return box_; }
  const Point& center() const { return center_; }

  /// Pseudo-angle in [0, 8): 0 at the right-edge midpoint, odd integers at the
  /// corners, uniform along the box perimeter.
  double angle(const Point& p) const {
    const double u = (p.x - center_.x) * inv_half_w_;
    const double v = (p.y - center_.y) * inv_half_h_;
    const double au = std::abs(u);
    const double av = std::abs(v);
    if (u >= av && u > 0.0) {
      if (v >= 0.0) return v / u;
      const double phi = 8.0 + v / u;
      return phi < 8.0 ? phi : kBelowEight;
    }
    if (v > au) return 2.0 - u / v;
    if (-u >= av && u < 0.0) return 4.0 + v / u;
    if (-v > au) return 6.0 - u / v;
    return 0.0;
  }

  /// Point on the box boundary with the given pseudo-angle.
  Point boundary_point(double phi) const {
    double u = 0.0;
    double v = 0.0;
    if (phi <= 1.0) {
      u = 1.0, v = phi;
    } else if (phi < 3.0) {
      u = 2.0 - phi, v = 1.0;
    } else if (phi <= 5.0) {
      u = -1.0, v = 4.0 - phi;
    } else if (phi < 7.0) {
      u = phi - 6.0, v = -1.0;
    } else {
      u = 1.0, v = phi - 8.0;
    }
    return {center_.x + u * box_.width() / 2.0, center_.y + v * box_.height() / 2.0};
  }

  /// Corner in the same quadrant as p; ties on an axis go to the + side.
  Point nearest_corner(const Point& p) const {
    return {p.x >= center_.x ? box_.x_max : box_.x_min, p.y >= center_.y ? box_.y_max : box_.y_min};
  }

 private:
  static constexpr double kBelowEight = 8.0 - 8.0 * std::numeric_limits<double>::epsilon() / 2.0;

  Aabb box_;
  Point center_;
  double inv_half_w_ = 0.0;
  double inv_half_h_ = 0.0;
};

inline int sector_of(double phi) {
  const int s = static_cast<int>(phi);
  return s < 0 ? 0 : (s >= kSectorCount ? kSectorCount - 1 : s);
}

inline double pseudo_angle(const Aabb& box, const Point& p) { return PolarFrame(box).angle(p); }

inline Point nearest_corner(const Aabb& box, const Point& p) { return PolarFrame(box).nearest_corner(p); }

/// Tight bounding box; throws on empty input.
inline Aabb bounding_box(std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::empty_input, "point set is empty");
  Aabb box{points[0].x, points[0].x, points[0].y, points[0].y};
  for (const Point& p : points.subspan(1)) {
    if (p.x < box.x_min) box.x_min = p.x;
    if (p.x > box.x_max) box.x_max = p.x;
    if (p.y < box.y_min) box.y_min = p.y;
    if (p.y > box.y_max) box.y_max = p.y;
  }
  return box;
}

}  // namespace maxdist
