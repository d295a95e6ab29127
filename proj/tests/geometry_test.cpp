#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "maxdist/geometry.hpp"
#include "test_support.hpp"

namespace maxdist {
namespace {

TEST(SquaredDistance, Examples) {
  EXPECT_EQ(squared_distance({0, 0}, {0, 0}), 0.0);
  EXPECT_EQ(squared_distance({0, 0}, {3, 4}), 25.0);
  EXPECT_EQ(squared_distance({1.5, -2}, {-0.5, 1}), 13.0);
}

TEST(SquaredDistance, Symmetric) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    ASSERT_EQ(squared_distance(a, b), squared_distance(b, a));
  }
}

TEST(OuterProduct, Examples) {
  EXPECT_EQ(outer_product({{0, 0}, {1, 0}}, {0, 1}), 1.0);
  EXPECT_EQ(outer_product({{0, 0}, {1, 0}}, {5, 0}), 0.0);
  EXPECT_EQ(outer_product({{1, 1}, {2, 2}}, {3, 1}), -4.0);
}

TEST(OuterProduct, SignMatchesDeterminant) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 20000; ++i) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const long double ref = testing::orientation_ld(a, b, c);
    if (std::abs(static_cast<double>(ref)) < 1e-9) continue;
    const double f = outer_product(OrientedEdge::through(a, b), c);
    ASSERT_EQ(f > 0, ref > 0) << i;
    ASSERT_EQ(certain_orientation(a, b, c), ref > 0 ? 1 : -1) << i;
  }
}

TEST(CertainOrientation, CollinearIsUndecided) {
  EXPECT_EQ(certain_orientation({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(certain_orientation({0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}), 0);
  EXPECT_EQ(certain_orientation({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(certain_orientation({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(CertainOrientation, NeverContradictsExactSign) {
  // Points nearly on a line: the filter may abstain but must not lie.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> jitter(-1e-15, 1e-15);
  for (int i = 0; i < 20000; ++i) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const double t = u(rng);
    const Point c{a.x + t * (b.x - a.x) + jitter(rng), a.y + t * (b.y - a.y) + jitter(rng)};
    const int s = certain_orientation(a, b, c);
    if (s == 0) continue;
    const long double ref = testing::orientation_ld(a, b, c);
    ASSERT_EQ(s, ref > 0 ? 1 : -1) << i;
  }
}

TEST(Aabb, Derived) {
  const Aabb box{1, 5, -2, 4};
  EXPECT_EQ(box.width(), 4.0);
  EXPECT_EQ(box.height(), 6.0);
  EXPECT_EQ(box.center(), (Point{3, 1}));
  EXPECT_FALSE(box.degenerate());
  EXPECT_TRUE((Aabb{1, 1, 0, 3}).degenerate());
}

TEST(BoundingBox, Tight) {
  const std::vector<Point> pts{{1, 2}, {-3, 7}, {4, -1}};
  EXPECT_EQ(bounding_box(pts), (Aabb{-3, 4, -1, 7}));
  EXPECT_THROW(bounding_box(std::vector<Point>{}), Error);
}

TEST(PseudoAngle, Examples) {
  const Aabb box{0, 4, 0, 2};
  const Point c = box.center();
  EXPECT_EQ(pseudo_angle(box, {c.x + box.width() / 2, c.y}), 0.0);
  EXPECT_EQ(pseudo_angle(box, {box.x_max, box.y_max}), 1.0);
  // u = 1, v = -0.5
  EXPECT_EQ(pseudo_angle(box, {4, 0.5}), 7.5);
  EXPECT_EQ(pseudo_angle(box, {box.x_min, box.y_max}), 3.0);
  EXPECT_EQ(pseudo_angle(box, {box.x_min, c.y}), 4.0);
  EXPECT_EQ(pseudo_angle(box, {box.x_min, box.y_min}), 5.0);
  EXPECT_EQ(pseudo_angle(box, {c.x, box.y_min}), 6.0);
  EXPECT_EQ(pseudo_angle(box, {box.x_max, box.y_min}), 7.0);
  EXPECT_EQ(pseudo_angle(box, {c.x, box.y_max}), 2.0);
  EXPECT_EQ(pseudo_angle(box, c), 0.0);
}

TEST(PseudoAngle, DegenerateBoxThrows) {
  try {
    pseudo_angle({0, 0, 0, 1}, {0, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_aabb);
  }
  EXPECT_THROW(nearest_corner({0, 1, 2, 2}, {0, 2}), Error);
}

TEST(PseudoAngle, StaysBelowEight) {
  const Aabb box{0, 2, 0, 2};
  const double phi = pseudo_angle(box, {2, 1 - 1e-15});
  EXPECT_LT(phi, 8.0);
  EXPECT_EQ(sector_of(phi), 7);
}

// Walk the box boundary counter-clockwise from the right-edge midpoint.
TEST(PseudoAngle, IncreasesAlongBoundary) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Aabb box = testing::random_box(rng);
    const double w = box.width(), h = box.height();
    const double perimeter = 2 * (w + h);
    std::uniform_real_distribution<double> u(0.0, perimeter);
    std::vector<double> ts(2000);
    for (auto& t : ts) t = u(rng);
    std::sort(ts.begin(), ts.end());
    const auto at = [&](double t) -> Point {
      const Point c = box.center();
      if (t < h / 2) return {box.x_max, c.y + t};
      t -= h / 2;
      if (t < w) return {box.x_max - t, box.y_max};
      t -= w;
      if (t < h) return {box.x_min, box.y_max - t};
      t -= h;
      if (t < w) return {box.x_min + t, box.y_min};
      t -= w;
      return {box.x_max, box.y_min + t};
    };
    double prev = -1.0;
    for (double t : ts) {
      const double phi = pseudo_angle(box, at(t));
      ASSERT_GE(phi, 0.0);
      ASSERT_LT(phi, 8.0);
      ASSERT_GE(phi, prev) << "t=" << t;
      prev = phi;
    }
  }
}

TEST(PseudoAngle, SameRaySameAngle) {
  const Aabb box{-3, 5, 1, 2};
  const Point c = box.center();
  const PolarFrame frame(box);
  for (const Point dir : {Point{1, 0.25}, Point{-0.5, 0.1}, Point{0.01, -0.4}, Point{-2, -0.3}}) {
    const double phi = frame.angle({c.x + dir.x, c.y + dir.y});
    EXPECT_DOUBLE_EQ(frame.angle({c.x + 0.5 * dir.x, c.y + 0.5 * dir.y}), phi);
  }
}

TEST(PseudoAngle, SectorMatchesExactAngle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Aabb box = testing::random_box(rng);
    const PolarFrame frame(box);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
      const Point p = testing::random_point_in(rng, box);
      if (testing::distance_to_sector_boundary(box, p) < 1e-9) continue;
      ASSERT_EQ(sector_of(frame.angle(p)), testing::exact_angle_sector(box, p)) << p.x << "," << p.y;
      ++checked;
    }
    EXPECT_GT(checked, 9900);
  }
}

TEST(PolarFrame, BoundaryPointInvertsAngle) {
  const Aabb box{0, 6, 0, 2};
  const PolarFrame frame(box);
  for (double phi = 0.0; phi < 8.0; phi += 0.125) {
    const Point b = frame.boundary_point(phi);
    EXPECT_NEAR(frame.angle(b), phi, 1e-12) << phi;
    EXPECT_TRUE(box.contains(b));
  }
  EXPECT_EQ(frame.boundary_point(0.5), (Point{6, 1.5}));
}

TEST(NearestCorner, Examples) {
  const Aabb box{0, 10, 0, 10};
  EXPECT_EQ(nearest_corner(box, {9, 8}), (Point{10, 10}));
  EXPECT_EQ(nearest_corner(box, {2, 3}), (Point{0, 0}));
  EXPECT_EQ(nearest_corner(box, {5, 9}), (Point{10, 10}));
  EXPECT_EQ(nearest_corner(box, {1, 5}), (Point{0, 10}));
}

TEST(NearestCorner, MinimizesDistanceInsideQuadrant) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Aabb box = testing::random_box(rng);
    const Point c = box.center();
    for (int i = 0; i < 1000; ++i) {
      const Point p = testing::random_point_in(rng, box);
      if (p.x == c.x || p.y == c.y) continue;
      const auto corners = box.corners();
      const Point best = *std::min_element(corners.begin(), corners.end(), [&](const Point& a, const Point& b) {
        return squared_distance(a, p) < squared_distance(b, p);
      });
      ASSERT_EQ(nearest_corner(box, p), best);
    }
  }
}

}  // namespace
}  // namespace maxdist
