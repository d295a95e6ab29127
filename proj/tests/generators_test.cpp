#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "maxdist/generators.hpp"

namespace maxdist {
namespace {

bool same_fraction(Rational r, std::uint64_t num, std::uint64_t den) { return r.num * den == num * r.den; }

TEST(Halton, Examples) {
  EXPECT_EQ(halton_element(2, 1), 0.5);
  EXPECT_EQ(halton_element(3, 2), 2.0 / 3.0);
  EXPECT_EQ(halton_element(3, 9), 1.0 / 27.0);
}

TEST(Halton, FirstNinePairs) {
  const std::uint64_t expected[9][4] = {{1, 2, 1, 3},  {1, 4, 2, 3}, {3, 4, 1, 9}, {1, 8, 4, 9},  {5, 8, 7, 9},
                                        {3, 8, 2, 9},  {7, 8, 5, 9}, {1, 16, 8, 9}, {9, 16, 1, 27}};
  for (std::uint64_t k = 1; k <= 9; ++k) {
    const auto& e = expected[k - 1];
    EXPECT_TRUE(same_fraction(halton_rational(2, k), e[0], e[1])) << k;
    EXPECT_TRUE(same_fraction(halton_rational(3, k), e[2], e[3])) << k;
    EXPECT_EQ(halton_element(2, k), static_cast<double>(e[0]) / static_cast<double>(e[1]));
    EXPECT_EQ(halton_element(3, k), static_cast<double>(e[2]) / static_cast<double>(e[3]));
  }
}

TEST(Halton, DistinctInOpenUnitInterval) {
  for (std::uint64_t base : {2u, 3u, 5u}) {
    std::set<double> seen;
    for (std::uint64_t k = 1; k <= 10000; ++k) {
      const double v = halton_element(base, k);
      ASSERT_GT(v, 0.0);
      ASSERT_LT(v, 1.0);
      seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 10000u);
  }
}

TEST(Halton, RejectsBadArguments) {
  EXPECT_THROW(halton_element(4, 1), Error);
  EXPECT_THROW(halton_element(1, 1), Error);
  EXPECT_THROW(halton_element(2, 0), Error);
}

TEST(Generate, HaltonUnitSquare) {
  const auto pts = generate({Distribution::halton, 2, {1.0, 1.0, 0.2}, 99});
  EXPECT_EQ(pts, (std::vector<Point>{{0.5, 1.0 / 3.0}, {0.25, 2.0 / 3.0}}));
}

TEST(Generate, HaltonScaledByRectangle) {
  const auto pts = generate({Distribution::halton, 9, {4.0, 3.0, 0.2}, 0});
  EXPECT_EQ(pts[8], (Point{4.0 * 9.0 / 16.0, 3.0 / 27.0}));
}

TEST(Generate, GaussRingOnHalfEllipseWhenNoiseVanishes) {
  for (double theta = 0.0; theta < 6.28; theta += 0.1) {
    for (int sign : {-1, 1}) {
      const Point p = gauss_ring_point(3.0, 2.0, theta, sign, 0.0);
      EXPECT_NEAR((p.x / 1.5) * (p.x / 1.5) + (p.y / 1.0) * (p.y / 1.0), 1.0, 1e-12);
    }
  }
}

TEST(Generate, GaussRingMostlyNearEllipse) {
  const DatasetParams prm{2.0, 1.0, 0.2};
  const auto pts = generate({Distribution::gauss_ring, 20000, prm, 5});
  std::size_t near = 0;
  for (const Point& p : pts) {
    const double r = std::sqrt((p.x / prm.a) * (p.x / prm.a) + (p.y / prm.b) * (p.y / prm.b));
    if (std::abs(r - 0.5) < 0.1) ++near;
  }
  // |N(0, 0.2)| / 2 < 0.1  <=>  |z| < 1: about 68%
  EXPECT_NEAR(static_cast<double>(near) / pts.size(), 0.6827, 0.02);
}

TEST(Generate, UniformEllipseInside) {
  const DatasetParams prm{3.0, 0.7, 0.2};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (const Point& p : generate({Distribution::uniform_ellipse, 5000, prm, seed})) {
      ASSERT_LE((p.x / prm.a) * (p.x / prm.a) + (p.y / prm.b) * (p.y / prm.b), 1.0);
    }
  }
}

TEST(Generate, UniformRectInside) {
  const DatasetParams prm{3.0, 0.7, 0.2};
  for (const Point& p : generate({Distribution::uniform_rect, 5000, prm, 1})) {
    ASSERT_GE(p.x, 0.0);
    ASSERT_LT(p.x, prm.a);
    ASSERT_GE(p.y, 0.0);
    ASSERT_LT(p.y, prm.b);
  }
}

TEST(Generate, GaussMoments) {
  const auto pts = generate({Distribution::gauss, 100000, {1.0, 1.0, 0.5}, 3});
  double sx = 0, sy = 0, sxx = 0, syy = 0;
  for (const Point& p : pts) {
    sx += p.x, sy += p.y, sxx += p.x * p.x, syy += p.y * p.y;
  }
  const double n = static_cast<double>(pts.size());
  EXPECT_NEAR(sx / n, 0.0, 0.01);
  EXPECT_NEAR(sy / n, 0.0, 0.01);
  EXPECT_NEAR(std::sqrt(sxx / n), 0.5, 0.01);
  EXPECT_NEAR(std::sqrt(syy / n), 0.5, 0.01);
}

TEST(Generate, Reproducible) {
  for (Distribution d : kAllDistributions) {
    const DatasetSpec spec{d, 1000, {}, 1234};
    EXPECT_EQ(generate(spec), generate(spec)) << to_string(d);
    if (d != Distribution::halton) {
      EXPECT_NE(generate(spec), generate({d, 1000, {}, 1235})) << to_string(d);
    }
    EXPECT_EQ(generate(spec).size(), 1000u);
  }
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(generate({Distribution::uniform_rect, 0, {}, 0}), Error);
  EXPECT_THROW(generate({Distribution::uniform_rect, 5, {0.0, 1.0, 0.2}, 0}), Error);
  EXPECT_THROW(generate({Distribution::uniform_ellipse, 5, {1.0, -1.0, 0.2}, 0}), Error);
  EXPECT_THROW(generate({Distribution::gauss, 5, {1.0, 1.0, 0.0}, 0}), Error);
  EXPECT_NO_THROW(generate({Distribution::halton, 5, {1.0, 1.0, 0.0}, 0}));
}

TEST(Distribution, NamesRoundTrip) {
  for (Distribution d : kAllDistributions) EXPECT_EQ(parse_distribution(to_string(d)), d);
  EXPECT_THROW(parse_distribution("poisson"), Error);
}

}  // namespace
}  // namespace maxdist
