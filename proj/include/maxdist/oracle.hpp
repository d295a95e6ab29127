#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>

#include "maxdist/error.hpp"
#include "maxdist/geometry.hpp"

namespace maxdist {

struct BruteForceResult {
  double distance = 0.0;
  double dist2 = 0.0;
  std::pair<Point, Point> pair;
};

/// O(N^2) all-pairs reference. Keep this obviously correct; it is the
/// yardstick for everything else.
inline BruteForceResult brute_force_diameter(std::span<const Point> points) {
  if (points.size() < 2) throw Error(Errc::too_few_points, "need at least 2 points");
  BruteForceResult r;
  r.pair = {points[0], points[1]};
  double dist = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dij = squared_distance(points[i], points[j]);
      if (dist < dij) {
        dist = dij;
        r.pair = {points[i], points[j]};
      }
    }
  }
  r.dist2 = dist;
  r.distance = std::sqrt(dist);
  return r;
}

}  // namespace maxdist
