#pragma once

// Timing harness behind the `bench` and `sweep` subcommands.
//
// Times are medians over repeats (robust to the occasional scheduler hiccup)
// measured with steady_clock around a full diameter() call, input generation
// excluded.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "maxdist/diameter.hpp"
#include "maxdist/error.hpp"
#include "maxdist/generators.hpp"
#include "maxdist/oracle.hpp"
#include "maxdist/point_io.hpp"

namespace maxdist {

inline double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lo + hi) / 2.0;
}

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct TimedDiameter {
  double median_ms = 0.0;
  PhaseTimes phases;  // of the median run
  DiameterResult result;
};

inline TimedDiameter time_diameter(const std::vector<Point>& points, const PipelineConfig& config, int repeats) {
  if (repeats < 1) throw Error(Errc::invalid_spec, "repeats must be at least 1");
  std::vector<double> totals;
  std::vector<PhaseTimes> phases;
  TimedDiameter out;
  for (int r = 0; r < repeats; ++r) {
    PhaseTimes pt;
    totals.push_back(time_ms([&] { out.result = diameter(points, config, &pt); }));
    phases.push_back(pt);
  }
  out.median_ms = median(totals);
  std::vector<std::size_t> order(totals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return totals[a] < totals[b]; });
  out.phases = phases[order[order.size() / 2]];
  return out;
}

inline double time_brute_force(const std::vector<Point>& points, int repeats, BruteForceResult* result = nullptr) {
  if (repeats < 1) throw Error(Errc::invalid_spec, "repeats must be at least 1");
  std::vector<double> totals;
  BruteForceResult r;
  for (int i = 0; i < repeats; ++i) totals.push_back(time_ms([&] { r = brute_force_diameter(points); }));
  if (result) *result = r;
  return median(totals);
}

struct BenchConfig {
  std::vector<Distribution> distributions{kAllDistributions.begin(), kAllDistributions.end()};
  std::vector<std::size_t> sizes{1000, 10000, 100000};
  int repeats = 5;
  int bf_repeats = 3;
  std::size_t bf_cap = 100000;
  std::optional<int> k;
  DatasetParams params;
  std::uint64_t seed = 42;
};

struct BenchRecord {
  std::string distribution;
  std::size_t n = 0;
  int k_used = 0;
  double wall_time_ms = 0.0;
  PhaseTimes phase_times_ms;
  DiameterStats stats;
  double distance = 0.0;
  std::optional<double> bf_time_ms;
  std::optional<double> speedup;
  /// Whether the squared distance matched brute force bit-for-bit, when it ran.
  std::optional<bool> matches_bf;
};

inline std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                          const std::function<void(const BenchRecord&)>& on_record = {}) {
  if (config.repeats < 1 || config.bf_repeats < 1) throw Error(Errc::invalid_spec, "repeats must be at least 1");
  std::vector<BenchRecord> records;
  for (Distribution dist : config.distributions) {
    for (std::size_t n : config.sizes) {
      const std::vector<Point> points = generate({dist, n, config.params, config.seed});
      const TimedDiameter timed = time_diameter(points, {config.k}, config.repeats);

      BenchRecord rec;
      rec.distribution = std::string(to_string(dist));
      rec.n = n;
      rec.k_used = timed.result.stats.k_used;
      rec.wall_time_ms = timed.median_ms;
      rec.phase_times_ms = timed.phases;
      rec.stats = timed.result.stats;
      rec.distance = timed.result.distance;
      if (n <= config.bf_cap && n >= 2) {
        BruteForceResult bf;
        rec.bf_time_ms = time_brute_force(points, config.bf_repeats, &bf);
        if (rec.wall_time_ms > 0.0) rec.speedup = *rec.bf_time_ms / rec.wall_time_ms;
        rec.matches_bf = bf.dist2 == timed.result.dist2;
      }
      if (on_record) on_record(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

namespace detail {

inline std::string fixed(double v, int precision = 4) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  return {buf, res.ptr};
}

}  // namespace detail

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "distribution,n,k_used,time_ms,bf_time_ms,speedup,survivors_polar,survivors_recheck,nonempty_cells\n";
  for (const BenchRecord& r : records) {
    out << r.distribution << ',' << r.n << ',' << r.k_used << ',' << detail::fixed(r.wall_time_ms) << ','
        << (r.bf_time_ms ? detail::fixed(*r.bf_time_ms) : "") << ','
        << (r.speedup ? detail::fixed(*r.speedup, 2) : "") << ',' << r.stats.n_after_polar << ','
        << r.stats.n_after_recheck << ',' << r.stats.nonempty_cells << '\n';
  }
}

/// Distribution with the smallest time for each n.
inline std::map<std::size_t, std::string> fastest_by_size(const std::vector<BenchRecord>& records) {
  std::map<std::size_t, const BenchRecord*> best;
  for (const BenchRecord& r : records) {
    auto [it, inserted] = best.try_emplace(r.n, &r);
    if (!inserted && r.wall_time_ms < it->second->wall_time_ms) it->second = &r;
  }
  std::map<std::size_t, std::string> out;
  for (const auto& [n, rec] : best) out[n] = rec->distribution;
  return out;
}

struct SweepConfig {
  Distribution distribution = Distribution::uniform_ellipse;
  std::size_t n = 100000;
  std::vector<int> k_values{1, 2, 4, 8, 16, 32, 64, 128};
  int repeats = 3;
  DatasetParams params;
  std::uint64_t seed = 42;
};

struct SweepRecord {
  int k = 1;
  double time_ms = 0.0;
  double distance = 0.0;
  DiameterStats stats;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::size_t best = 0;  // index of the fastest k
};

/// Runs the pipeline at every k over one shared dataset.
inline SweepResult run_sweep(const SweepConfig& config) {
  if (config.k_values.empty()) throw Error(Errc::invalid_spec, "k_values must not be empty");
  const std::vector<Point> points = generate({config.distribution, config.n, config.params, config.seed});
  SweepResult out;
  for (int k : config.k_values) {
    if (k < 1) throw Error(Errc::invalid_spec, "grid size must be at least 1");
    const TimedDiameter timed = time_diameter(points, {k}, config.repeats);
    out.records.push_back({k, timed.median_ms, timed.result.distance, timed.result.stats});
  }
  for (std::size_t i = 1; i < out.records.size(); ++i) {
    if (out.records[i].time_ms < out.records[out.best].time_ms) out.best = i;
  }
  return out;
}

inline void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "k,time_ms,distance,nonempty_cells,pairs_surviving,best\n";
  for (std::size_t i = 0; i < sweep.records.size(); ++i) {
    const SweepRecord& r = sweep.records[i];
    out << r.k << ',' << detail::fixed(r.time_ms) << ',' << format_double(r.distance) << ','
        << r.stats.nonempty_cells << ',' << r.stats.pairs_surviving << ',' << (i == sweep.best ? 1 : 0) << '\n';
  }
}

}  // namespace maxdist
