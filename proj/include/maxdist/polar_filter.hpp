#pragma once

// Phase 1 of the diameter pipeline: discard points that provably cannot be a
// diameter endpoint.
//
//   1. One pass finds the bounding box and the (up to four) extremal points;
//      points strictly inside their polygon are dropped.
//   2. The rest are scattered into 8 pseudo-angle sectors around the box
//      center. Each sector tracks R_min, its point closest to the sector's box
//      corner. The R_min points form a star polygon around the center and a
//      point strictly inside the chord between the two R_min points that
//      bracket it is dropped.
//   3. Survivors are rechecked against the final star polygon, merged with the
//      extremal polygon.
//
// Every elimination requires the point to lie strictly inside the triangle
// (center, chord start, chord end), certified by an error-bounded orientation
// test. Chord endpoints are input points that stay in the candidate set, or
// points on the extremal polygon boundary, so the convex hull of the
// candidates equals the convex hull of the input.

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "maxdist/geometry.hpp"

namespace maxdist {

/// Counter-clockwise polygon of the distinct extremal points.
struct InitialPolygon {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }

  OrientedEdge edge(std::size_t i) const {
    return OrientedEdge::through(vertices[i], vertices[(i + 1) % vertices.size()]);
  }

  double twice_signed_area() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Point& a = vertices[i];
      const Point& b = vertices[(i + 1) % vertices.size()];
      sum += a.x * b.y - a.y * b.x;
    }
    return sum;
  }

  /// Usable for the polar phase: at least 3 vertices and positive area.
  bool proper() const { return vertices.size() >= 3 && twice_signed_area() > 0.0; }

  bool is_vertex(const Point& p) const { return std::find(vertices.begin(), vertices.end(), p) != vertices.end(); }

  /// Strict interior test; points on or near the boundary are reported outside.
  bool strictly_contains(const Point& p) const {
    if (vertices.size() < 3) return false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (certain_orientation(vertices[i], vertices[(i + 1) % vertices.size()], p) <= 0) return false;
    }
    return true;
  }
};

struct BoundingScan {
  Aabb box;
  InitialPolygon polygon;
  /// First-encountered extremal points, indexed min-x, max-x, min-y, max-y.
  std::array<Point, 4> extremal{};
};

/// Single pass over the input: tight bounding box plus the polygon of the
/// first-encountered min-x, max-x, min-y and max-y points.
inline BoundingScan compute_aabb_and_extremals(std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::empty_input, "point set is empty");
  std::size_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Point& p = points[i];
    if (p.x < points[min_x].x) min_x = i;
    if (p.x > points[max_x].x) max_x = i;
    if (p.y < points[min_y].y) min_y = i;
    if (p.y > points[max_y].y) max_y = i;
  }

  BoundingScan scan;
  scan.box = {points[min_x].x, points[max_x].x, points[min_y].y, points[max_y].y};
  scan.extremal = {points[min_x], points[max_x], points[min_y], points[max_y]};
  // bottom, right, top, left is counter-clockwise
  for (std::size_t idx : {min_y, max_x, max_y, min_x}) {
    if (!scan.polygon.is_vertex(points[idx])) scan.polygon.vertices.push_back(points[idx]);
  }
  return scan;
}

/// Keeps every point that is not strictly inside the polygon. Polygons with
/// fewer than 3 vertices pass everything through.
inline std::vector<Point> initial_polygon_filter(std::span<const Point> points, const InitialPolygon& poly) {
  if (poly.size() < 3) return {points.begin(), points.end()};
  std::vector<Point> out;
  out.reserve(points.size() / 2);
  for (const Point& p : points) {
    if (!poly.strictly_contains(p)) out.push_back(p);
  }
  return out;
}

/// Where the ray from the box center through the middle of a sector leaves
/// the polygon. Empty when the center lies on the polygon boundary and that
/// ray leaves immediately.
inline std::optional<Point> initial_r_min(const Aabb& box, const InitialPolygon& poly, int sector) {
  const PolarFrame frame(box);
  const Point c = frame.center();
  const Vec2 d = frame.boundary_point(sector + 0.5) - c;
  double best_t = -1.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const OrientedEdge e = poly.edge(i);
    const double denom = cross(d, e.dir);
    if (denom == 0.0) continue;
    const Vec2 ac = e.base - c;
    const double t = cross(ac, e.dir) / denom;
    const double s = cross(ac, d) / denom;
    constexpr double slack = 1e-12;
    if (s >= -slack && s <= 1.0 + slack && t > best_t) best_t = t;
  }
  if (!(best_t > 1e-12)) return std::nullopt;
  return c + best_t * d;
}

struct Sector {
  int index = 0;
  bool has_r_min = false;
  /// R_min not yet replaced by an input point (it sits on the polygon boundary).
  bool r_min_virtual = false;
  Point r_min_point;
  double r_min_dist2 = std::numeric_limits<double>::infinity();
  double r_min_angle = 0.0;
  std::vector<Point> kept;
};

enum class Phase { initial_polygon, polar_divide, recheck };

/// Why a point was dropped: it lies strictly left of the counter-clockwise
/// chord start -> end. Endpoints flagged virtual are construction points on
/// the initial polygon boundary rather than input points.
struct Elimination {
  Point point;
  Point chord_start;
  Point chord_end;
  Phase phase = Phase::polar_divide;
  bool start_virtual = false;
  bool end_virtual = false;
};

using EliminationLog = std::vector<Elimination>;

struct PolarState {
  Aabb aabb;
  InitialPolygon initial;
  std::array<Sector, kSectorCount> sectors;
  std::size_t input_count = 0;
  std::size_t eliminated_count = 0;

  std::size_t kept_count() const {
    std::size_t n = 0;
    for (const Sector& s : sectors) n += s.kept.size();
    return n;
  }
};

/// The sequential fold behind polar_divide, one point at a time.
class PolarDivider {
 public:
  PolarDivider(const Aabb& box, const InitialPolygon& poly, EliminationLog* log = nullptr)
      : frame_(box), log_(log) {
    state_.aabb = box;
    state_.initial = poly;
    for (int i = 0; i < kSectorCount; ++i) {
      Sector& s = state_.sectors[i];
      s.index = i;
      if (auto r = initial_r_min(box, poly, i)) {
        s.has_r_min = true;
        s.r_min_virtual = true;
        s.r_min_point = *r;
        s.r_min_dist2 = squared_distance(*r, frame_.nearest_corner(*r));
        s.r_min_angle = frame_.angle(*r);
      }
    }
  }

  void add(const Point& p) {
    ++state_.input_count;
    const double phi = frame_.angle(p);
    Sector& s = state_.sectors[sector_of(phi)];
    const double d2 = squared_distance(p, frame_.nearest_corner(p));
    if (d2 < s.r_min_dist2) {
      s.has_r_min = true;
      s.r_min_virtual = false;
      s.r_min_point = p;
      s.r_min_dist2 = d2;
      s.r_min_angle = phi;
      s.kept.push_back(p);
      return;
    }
    if (!state_.initial.is_vertex(p)) {
      const bool lower = phi < s.r_min_angle;
      const Sector& a = lower ? state_.sectors[(s.index + kSectorCount - 1) % kSectorCount] : s;
      const Sector& b = lower ? s : state_.sectors[(s.index + 1) % kSectorCount];
      if (a.has_r_min && b.has_r_min && certain_orientation(a.r_min_point, b.r_min_point, p) > 0) {
        ++state_.eliminated_count;
        if (log_) {
          log_->push_back({p, a.r_min_point, b.r_min_point, Phase::polar_divide, a.r_min_virtual, b.r_min_virtual});
        }
        return;
      }
    }
    s.kept.push_back(p);
  }

  const PolarState& state() const& { return state_; }
  PolarState state() && { return std::move(state_); }

 private:
  PolarFrame frame_;
  EliminationLog* log_;
  PolarState state_;
};

/// Requires a non-degenerate box and a proper polygon.
inline PolarState polar_divide(std::span<const Point> survivors, const Aabb& box, const InitialPolygon& poly,
                               EliminationLog* log = nullptr) {
  PolarDivider divider(box, poly, log);
  for (const Point& p : survivors) divider.add(p);
  return std::move(divider).state();
}

/// Vertex of the recheck polygon.
struct StarVertex {
  Point point;
  double angle = 0.0;
  bool is_virtual = false;
};

/// Initial polygon vertices merged with the final R_min points, sorted by
/// pseudo-angle. Of several vertices on one ray only the farthest is kept.
inline std::vector<StarVertex> recheck_polygon(const PolarState& state) {
  const PolarFrame frame(state.aabb);
  std::vector<StarVertex> verts;
  for (const Point& v : state.initial.vertices) verts.push_back({v, frame.angle(v), false});
  for (const Sector& s : state.sectors) {
    if (s.has_r_min) verts.push_back({s.r_min_point, s.r_min_angle, s.r_min_virtual});
  }
  const Point c = frame.center();
  std::sort(verts.begin(), verts.end(), [&](const StarVertex& a, const StarVertex& b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    return squared_distance(a.point, c) > squared_distance(b.point, c);
  });
  verts.erase(std::unique(verts.begin(), verts.end(),
                          [](const StarVertex& a, const StarVertex& b) { return a.angle == b.angle; }),
              verts.end());
  return verts;
}

/// Retests every kept point against the chord of the recheck polygon that
/// brackets its pseudo-angle. Returns the final candidate set.
inline std::vector<Point> recheck(const PolarState& state, EliminationLog* log = nullptr) {
  const PolarFrame frame(state.aabb);
  const std::vector<StarVertex> verts = recheck_polygon(state);

  std::vector<Point> protected_vertices = state.initial.vertices;
  for (const Sector& s : state.sectors) {
    if (s.has_r_min && !s.r_min_virtual) protected_vertices.push_back(s.r_min_point);
  }
  const auto is_protected = [&](const Point& p) {
    return std::find(protected_vertices.begin(), protected_vertices.end(), p) != protected_vertices.end();
  };

  std::vector<double> angles(verts.size());
  std::transform(verts.begin(), verts.end(), angles.begin(), [](const StarVertex& v) { return v.angle; });

  std::vector<Point> out;
  out.reserve(state.kept_count());
  for (const Sector& s : state.sectors) {
    for (const Point& p : s.kept) {
      if (verts.size() < 2 || is_protected(p)) {
        out.push_back(p);
        continue;
      }
      const double phi = frame.angle(p);
      std::size_t hi = static_cast<std::size_t>(std::upper_bound(angles.begin(), angles.end(), phi) - angles.begin());
      std::size_t lo = hi == 0 ? verts.size() - 1 : hi - 1;
      if (hi == verts.size()) hi = 0;
      double gap = angles[hi] - angles[lo];
      if (gap <= 0.0) gap += kSectorCount;
      // a pseudo-angle span of at most 2 is always narrower than a half-turn
      const StarVertex& a = verts[lo];
      const StarVertex& b = verts[hi];
      if (gap <= 2.0 && certain_orientation(a.point, b.point, p) > 0) {
        if (log) log->push_back({p, a.point, b.point, Phase::recheck, a.is_virtual, b.is_virtual});
        continue;
      }
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace maxdist
