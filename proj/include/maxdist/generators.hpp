#pragma once

// Seeded point-set generators for the five benchmark distributions.
//
// Randomness comes from std::mt19937_64 (its output sequence is fixed by the
// standard). Uniform and normal variates are derived from it here instead of
// via <random> distributions, whose algorithms are implementation-defined,
// so a seed produces the same points with any standard library.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "maxdist/error.hpp"
#include "maxdist/geometry.hpp"

namespace maxdist {

enum class Distribution { uniform_ellipse, uniform_rect, gauss, halton, gauss_ring };

inline constexpr std::array<Distribution, 5> kAllDistributions = {
    Distribution::uniform_ellipse, Distribution::uniform_rect, Distribution::gauss, Distribution::halton,
    Distribution::gauss_ring};

inline std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::uniform_ellipse: return "uniform_ellipse";
    case Distribution::uniform_rect: return "uniform_rect";
    case Distribution::gauss: return "gauss";
    case Distribution::halton: return "halton";
    case Distribution::gauss_ring: return "gauss_ring";
  }
  return "unknown";
}

inline Distribution parse_distribution(std::string_view name) {
  for (Distribution d : kAllDistributions) {
    if (to_string(d) == name) return d;
  }
  throw Error(Errc::invalid_spec, "unknown distribution '" + std::string(name) + "'");
}

struct DatasetParams {
  double a = 1.0;  // semi-major axis or rectangle width
  double b = 0.5;  // semi-minor axis or rectangle height
  double sigma = 0.2;
};

struct DatasetSpec {
  Distribution distribution = Distribution::uniform_rect;
  std::size_t n = 0;
  DatasetParams params;
  std::uint64_t seed = 0;  // ignored by halton
};

inline void validate(const DatasetSpec& spec) {
  if (spec.n < 1) throw Error(Errc::invalid_spec, "n must be at least 1");
  const DatasetParams& p = spec.params;
  if (!(p.a > 0.0) || !(p.b > 0.0) || !std::isfinite(p.a) || !std::isfinite(p.b)) {
    throw Error(Errc::invalid_spec, "a and b must be positive and finite");
  }
  const bool uses_sigma = spec.distribution == Distribution::gauss || spec.distribution == Distribution::gauss_ring;
  if (uses_sigma && (!(p.sigma > 0.0) || !std::isfinite(p.sigma))) {
    throw Error(Errc::invalid_spec, "sigma must be positive and finite");
  }
}

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Radical inverse of k in base p as an exact fraction: the base-p digits of
/// k mirrored about the radix point.
inline Rational halton_rational(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw Error(Errc::invalid_spec, "halton base must be prime");
  if (k < 1) throw Error(Errc::invalid_spec, "halton index starts at 1");
  Rational r;
  for (; k > 0; k /= p) {
    r.num = r.num * p + k % p;
    r.den *= p;
  }
  return r;
}

/// Correctly rounded value of halton_rational(p, k).
inline double halton_element(std::uint64_t p, std::uint64_t k) {
  const Rational r = halton_rational(p, k);
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

/// Point of the Gauss ring for fixed draws: radius factor 0.5 + 0.5 * sign * g
/// applied to the (a, b) ellipse at angle theta.
inline Point gauss_ring_point(double a, double b, double theta, int sign, double g) {
  const double eps = 0.5 + 0.5 * sign * g;
  return {a * eps * std::cos(theta), b * eps * std::sin(theta)};
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal by the Box-Muller transform; the second variate is cached.
  double normal() {
    if (spare_) {
      const double z = *spare_;
      spare_.reset();
      return z;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

inline std::vector<Point> generate(const DatasetSpec& spec) {
  validate(spec);
  const DatasetParams& prm = spec.params;
  std::vector<Point> out;
  out.reserve(spec.n);
  Sampler rng(spec.seed);

  switch (spec.distribution) {
    case Distribution::uniform_rect:
      while (out.size() < spec.n) {
        const double x = rng.uniform(0.0, prm.a);
        const double y = rng.uniform(0.0, prm.b);
        out.push_back({x, y});
      }
      break;
    case Distribution::uniform_ellipse:
      while (out.size() < spec.n) {
        const double x = rng.uniform(-prm.a, prm.a);
        const double y = rng.uniform(-prm.b, prm.b);
        const double u = x / prm.a;
        const double v = y / prm.b;
        if (u * u + v * v <= 1.0) out.push_back({x, y});
      }
      break;
    case Distribution::gauss:
      while (out.size() < spec.n) {
        const double x = prm.sigma * rng.normal();
        const double y = prm.sigma * rng.normal();
        out.push_back({x, y});
      }
      break;
    case Distribution::halton:
      for (std::uint64_t k = 1; k <= spec.n; ++k) {
        out.push_back({prm.a * halton_element(2, k), prm.b * halton_element(3, k)});
      }
      break;
    case Distribution::gauss_ring:
      while (out.size() < spec.n) {
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        int sign = 1;
        double g = 0.0;
        do {
          sign = rng.coin() ? 1 : -1;
          g = std::abs(prm.sigma * rng.normal());
        } while (0.5 + 0.5 * sign * g < 0.0);
        out.push_back(gauss_ring_point(prm.a, prm.b, theta, sign, g));
      }
      break;
  }
  return out;
}

}  // namespace maxdist
