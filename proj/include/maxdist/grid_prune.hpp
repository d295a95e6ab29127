#pragma once

// Phase 2 of the diameter pipeline: bucket the remaining candidates into a
// k x k grid over the bounding box, drop cell pairs whose farthest-corner
// distance is below the best nearest-corner distance, and brute-force what is
// left.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxdist/geometry.hpp"

namespace maxdist {

struct Cell {
  std::size_t index = 0;  // row * k + col
  int row = 0;
  int col = 0;
  std::vector<Point> points;
};

struct Grid {
  int k = 1;
  double dx = 0.0;
  double dy = 0.0;
  Point origin;
  /// Nonempty cells only, ascending by index.
  std::vector<Cell> cells;

  std::pair<int, int> row_col(const Point& p) const {
    auto clamp_floor = [this](double t) {
      const double f = std::floor(t);
      if (!(f > 0.0)) return 0;
      return f >= k - 1 ? k - 1 : static_cast<int>(f);
    };
    return {clamp_floor((p.y - origin.y) / dy), clamp_floor((p.x - origin.x) / dx)};
  }

  std::size_t index_of(const Point& p) const {
    const auto [row, col] = row_col(p);
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(k) + static_cast<std::size_t>(col);
  }

  std::size_t point_count() const {
    std::size_t n = 0;
    for (const Cell& c : cells) n += c.points.size();
    return n;
  }

  const Cell* find(std::size_t index) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), index,
                               [](const Cell& c, std::size_t idx) { return c.index < idx; });
    return it != cells.end() && it->index == index ? &*it : nullptr;
  }
};

inline Grid build_grid(std::span<const Point> points, const Aabb& box, int k) {
  if (k < 1) throw Error(Errc::invalid_spec, "grid size must be at least 1, got " + std::to_string(k));
  if (box.degenerate()) throw Error(Errc::degenerate_aabb, "bounding box has zero width or height");

  Grid grid;
  grid.k = k;
  grid.dx = box.width() / k;
  grid.dy = box.height() / k;
  grid.origin = {box.x_min, box.y_min};

  std::vector<std::pair<std::size_t, Point>> tagged;
  tagged.reserve(points.size());
  for (const Point& p : points) tagged.emplace_back(grid.index_of(p), p);
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [index, p] : tagged) {
    if (grid.cells.empty() || grid.cells.back().index != index) {
      Cell cell;
      cell.index = index;
      cell.row = static_cast<int>(index / static_cast<std::size_t>(k));
      cell.col = static_cast<int>(index % static_cast<std::size_t>(k));
      grid.cells.push_back(std::move(cell));
    }
    grid.cells.back().points.push_back(p);
  }
  return grid;
}

struct CellPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double d_min2 = 0.0;  // nearest corners
  double d_max2 = 0.0;  // farthest corners
};

/// Distance bounds between two cells from their row/column offsets alone.
inline CellPair cell_pair_bounds(const Grid& grid, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const auto k = static_cast<std::size_t>(grid.k);
  const auto delta = [](std::size_t a, std::size_t b) { return static_cast<double>(a > b ? a - b : b - a); };
  const double dc = delta(i % k, j % k);
  const double dr = delta(i / k, j / k);
  const double gap_x = std::max(dc - 1.0, 0.0) * grid.dx;
  const double gap_y = std::max(dr - 1.0, 0.0) * grid.dy;
  const double span_x = (dc + 1.0) * grid.dx;
  const double span_y = (dr + 1.0) * grid.dy;
  return {i, j, gap_x * gap_x + gap_y * gap_y, span_x * span_x + span_y * span_y};
}

struct PruneResult {
  std::vector<CellPair> pairs;
  std::size_t pairs_total = 0;
  /// Largest nearest-corner distance over all pairs; a lower bound on the diameter.
  double d_min2_max = 0.0;
};

/// All unordered pairs of nonempty cells, self-pairs included, minus those
/// whose farthest-corner distance is strictly below the lower bound.
inline PruneResult prune_pairs_with_stats(const Grid& grid) {
  PruneResult result;
  const std::size_t m = grid.cells.size();
  result.pairs_total = m * (m + 1) / 2;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const double d = cell_pair_bounds(grid, grid.cells[a].index, grid.cells[b].index).d_min2;
      if (d > result.d_min2_max) result.d_min2_max = d;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const CellPair pair = cell_pair_bounds(grid, grid.cells[a].index, grid.cells[b].index);
      if (!(pair.d_max2 < result.d_min2_max)) result.pairs.push_back(pair);
    }
  }
  return result;
}

inline std::vector<CellPair> prune_pairs(const Grid& grid) { return prune_pairs_with_stats(grid).pairs; }

struct FarthestPair {
  double dist2 = 0.0;
  Point first;
  Point second;
};

/// Brute force over the point pairs of the given cell pairs. The first
/// maximizer in scan order wins.
inline FarthestPair max_over_pairs(const Grid& grid, std::span<const CellPair> pairs) {
  FarthestPair best{-1.0, {}, {}};
  for (const CellPair& pair : pairs) {
    const Cell* ci = grid.find(pair.i);
    const Cell* cj = grid.find(pair.j);
    if (!ci || !cj) continue;
    const std::vector<Point>& a = ci->points;
    const std::vector<Point>& b = cj->points;
    if (pair.i == pair.j) {
      for (std::size_t s = 0; s + 1 < a.size(); ++s) {
        for (std::size_t t = s + 1; t < a.size(); ++t) {
          const double d = squared_distance(a[s], a[t]);
          if (d > best.dist2) best = {d, a[s], a[t]};
        }
      }
    } else {
      for (const Point& p : a) {
        for (const Point& q : b) {
          const double d = squared_distance(p, q);
          if (d > best.dist2) best = {d, p, q};
        }
      }
    }
  }
  if (best.dist2 < 0.0) {
    // only singleton self-pairs
    const Point p = grid.cells.empty() ? Point{} : grid.cells.front().points.front();
    best = {0.0, p, p};
  }
  return best;
}

}  // namespace maxdist
