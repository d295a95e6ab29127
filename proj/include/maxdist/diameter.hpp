#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxdist/error.hpp"
#include "maxdist/geometry.hpp"
#include "maxdist/grid_prune.hpp"
#include "maxdist/oracle.hpp"
#include "maxdist/polar_filter.hpp"

namespace maxdist {

struct PipelineConfig {
  /// Grid cells per axis; empty selects default_k() from the candidate count.
  std::optional<int> k;
  static constexpr int sector_count = kSectorCount;
};

struct DiameterStats {
  std::size_t n_input = 0;
  std::size_t n_after_initial_polygon = 0;
  std::size_t n_after_polar = 0;
  std::size_t n_after_recheck = 0;
  std::size_t nonempty_cells = 0;
  std::size_t pairs_total = 0;
  std::size_t pairs_surviving = 0;
  int k_used = 0;
};

struct DiameterResult {
  double distance = 0.0;
  double dist2 = 0.0;
  std::pair<Point, Point> pair;
  DiameterStats stats;
};

/// Wall-clock milliseconds spent in each phase of one diameter() call.
struct PhaseTimes {
  double scan_ms = 0.0;
  double initial_polygon_ms = 0.0;
  double polar_ms = 0.0;
  double recheck_ms = 0.0;
  double grid_ms = 0.0;
};

/// ceil(sqrt(n / 4)) clamped to [2, 256]: about four candidates per cell
/// along the occupied band.
inline int default_k(std::size_t n_survivors) {
  const double k = std::ceil(std::sqrt(static_cast<double>(n_survivors) / 4.0));
  return static_cast<int>(std::clamp(k, 2.0, 256.0));
}

namespace detail {

class PhaseClock {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline void validate(std::span<const Point> points, const PipelineConfig& config) {
  if (points.size() < 2) throw Error(Errc::too_few_points, "need at least 2 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_finite(points[i])) {
      throw Error(Errc::non_finite_coordinate, "point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  if (config.k && *config.k < 1) throw Error(Errc::invalid_spec, "grid size must be at least 1");
}

}  // namespace detail

/// Exact diameter of a planar point set.
///
/// Degenerate inputs skip the elimination phases: a zero-width or zero-height
/// box is answered from its extremal points, and inputs whose extremal
/// polygon has no area fall back to brute force.
inline DiameterResult diameter(std::span<const Point> points, const PipelineConfig& config = {},
                               PhaseTimes* times = nullptr, EliminationLog* log = nullptr) {
  detail::validate(points, config);
  detail::PhaseClock clock;
  PhaseTimes t;

  DiameterResult result;
  DiameterStats& st = result.stats;
  st.n_input = points.size();

  const BoundingScan scan = compute_aabb_and_extremals(points);
  t.scan_ms = clock.lap();

  const auto finish = [&](double dist2, const Point& a, const Point& b) {
    result.dist2 = dist2;
    result.distance = std::sqrt(dist2);
    result.pair = {a, b};
    if (times) *times = t;
    return result;
  };
  const auto skip_phases = [&] {
    st.n_after_initial_polygon = st.n_after_polar = st.n_after_recheck = points.size();
  };

  if (scan.box.degenerate()) {
    skip_phases();
    // all points share one coordinate, so the spread along the other axis is the answer
    const bool along_x = scan.box.width() > 0.0;
    const Point& lo = along_x ? scan.extremal[0] : scan.extremal[2];
    const Point& hi = along_x ? scan.extremal[1] : scan.extremal[3];
    return finish(squared_distance(lo, hi), lo, hi);
  }
  if (!scan.polygon.proper()) {
    skip_phases();
    const BruteForceResult bf = brute_force_diameter(points);
    return finish(bf.dist2, bf.pair.first, bf.pair.second);
  }

  if (log) {
    for (const Point& p : points) {
      if (scan.polygon.strictly_contains(p)) log->push_back({p, {}, {}, Phase::initial_polygon, false, false});
    }
  }
  const std::vector<Point> outside = initial_polygon_filter(points, scan.polygon);
  st.n_after_initial_polygon = outside.size();
  t.initial_polygon_ms = clock.lap();

  const PolarState state = polar_divide(outside, scan.box, scan.polygon, log);
  st.n_after_polar = state.kept_count();
  t.polar_ms = clock.lap();

  const std::vector<Point> candidates = recheck(state, log);
  st.n_after_recheck = candidates.size();
  t.recheck_ms = clock.lap();

  const int k = config.k.value_or(default_k(candidates.size()));
  const Grid grid = build_grid(candidates, scan.box, k);
  const PruneResult pruned = prune_pairs_with_stats(grid);
  const FarthestPair best = max_over_pairs(grid, pruned.pairs);
  st.k_used = k;
  st.nonempty_cells = grid.cells.size();
  st.pairs_total = pruned.pairs_total;
  st.pairs_surviving = pruned.pairs.size();
  t.grid_ms = clock.lap();

  return finish(best.dist2, best.first, best.second);
}

}  // namespace maxdist
