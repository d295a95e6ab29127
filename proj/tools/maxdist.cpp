// maxdist: generate point sets, compute diameters, benchmark the pipeline.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxdist/maxdist.hpp"

namespace {

using maxdist::Point;
using nlohmann::json;

struct GlobalOptions {
  std::uint64_t seed = 42;
  bool json = false;
  std::string out;
};

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw maxdist::Error(maxdist::Errc::io_error, "cannot open '" + path + "' for writing");
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw maxdist::Error(maxdist::Errc::io_error, "write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json point_json(const Point& p) { return json::array({p.x, p.y}); }

json stats_json(const maxdist::DiameterStats& s) {
  return {{"n_input", s.n_input},
          {"n_after_initial_polygon", s.n_after_initial_polygon},
          {"n_after_polar", s.n_after_polar},
          {"n_after_recheck", s.n_after_recheck},
          {"nonempty_cells", s.nonempty_cells},
          {"pairs_total", s.pairs_total},
          {"pairs_surviving", s.pairs_surviving},
          {"k_used", s.k_used}};
}

std::string point_text(const Point& p) {
  return "(" + maxdist::format_double(p.x) + ", " + maxdist::format_double(p.y) + ")";
}

std::vector<Point> load(const std::string& path) {
  std::vector<Point> points = maxdist::read_points_file(path);
  if (points.size() < 2) throw maxdist::Error(maxdist::Errc::too_few_points, "need at least 2 points");
  return points;
}

void cmd_diameter(const GlobalOptions& g, const std::string& path, std::optional<int> k) {
  const std::vector<Point> points = load(path);
  const maxdist::DiameterResult r = maxdist::diameter(points, {k});
  Output out(g.out);
  std::ostream& os = out.stream();
  if (g.json) {
    os << json{{"distance", r.distance},
               {"pair", json::array({point_json(r.pair.first), point_json(r.pair.second)})},
               {"stats", stats_json(r.stats)}}
              .dump()
       << '\n';
  } else {
    const auto& s = r.stats;
    os << "distance: " << maxdist::format_double(r.distance) << '\n'
       << "pair: " << point_text(r.pair.first) << ' ' << point_text(r.pair.second) << '\n'
       << "points: " << s.n_input << " -> initial polygon " << s.n_after_initial_polygon << " -> polar "
       << s.n_after_polar << " -> recheck " << s.n_after_recheck << '\n'
       << "grid: k=" << s.k_used << ", nonempty cells " << s.nonempty_cells << ", cell pairs " << s.pairs_surviving
       << '/' << s.pairs_total << '\n';
  }
  out.close();
}

void cmd_oracle(const GlobalOptions& g, const std::string& path) {
  const std::vector<Point> points = load(path);
  const maxdist::BruteForceResult r = maxdist::brute_force_diameter(points);
  Output out(g.out);
  if (g.json) {
    out.stream() << json{{"distance", r.distance},
                         {"pair", json::array({point_json(r.pair.first), point_json(r.pair.second)})}}
                        .dump()
                 << '\n';
  } else {
    out.stream() << "distance: " << maxdist::format_double(r.distance) << '\n'
                 << "pair: " << point_text(r.pair.first) << ' ' << point_text(r.pair.second) << '\n';
  }
  out.close();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diameter of planar point sets by polar and grid elimination"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--seed", g.seed, "RNG seed for generated datasets")->capture_default_str();
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--out", g.out, "Output file (default: stdout)");

  maxdist::DatasetParams params;
  const auto add_params = [&params](CLI::App* cmd) {
    cmd->add_option("--a", params.a, "Semi-major axis or rectangle width")->capture_default_str();
    cmd->add_option("--b", params.b, "Semi-minor axis or rectangle height")->capture_default_str();
    cmd->add_option("--sigma", params.sigma, "Standard deviation for gauss and gauss_ring")->capture_default_str();
  };

  // generate
  std::string gen_dist;
  std::size_t gen_n = 0;
  auto* gen = app.add_subcommand("generate", "Write a generated point set as CSV");
  gen->add_option("--dist", gen_dist, "uniform_ellipse | uniform_rect | gauss | halton | gauss_ring")->required();
  gen->add_option("-n,--n", gen_n, "Number of points")->required();
  add_params(gen);

  // diameter
  std::string in_path;
  std::optional<int> k;
  auto* dia = app.add_subcommand("diameter", "Diameter of a point file via the elimination pipeline");
  dia->add_option("file", in_path, "Point file (CSV, header x,y)")->required();
  dia->add_option("-k,--k", k, "Grid cells per axis (default: from candidate count)");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Diameter of a point file by brute force");
  orc->add_option("file", in_path, "Point file (CSV, header x,y)")->required();

  // bench
  maxdist::BenchConfig bench;
  std::vector<std::string> bench_dists;
  auto* ben = app.add_subcommand("bench", "Time the pipeline against brute force");
  ben->add_option("--dists", bench_dists, "Distributions (default: all)")->delimiter(',');
  ben->add_option("--sizes", bench.sizes, "Point counts")->delimiter(',')->capture_default_str();
  ben->add_option("--repeats", bench.repeats, "Timed runs per configuration")->capture_default_str();
  ben->add_option("--bf-repeats", bench.bf_repeats, "Timed brute-force runs")->capture_default_str();
  ben->add_option("--bf-cap", bench.bf_cap, "Largest n for which brute force runs")->capture_default_str();
  ben->add_option("-k,--k", bench.k, "Fixed grid size (default: from candidate count)");
  add_params(ben);

  // sweep
  maxdist::SweepConfig sweep;
  std::string sweep_dist = "uniform_ellipse";
  auto* swp = app.add_subcommand("sweep", "Time the pipeline over a range of grid sizes");
  swp->add_option("--dist", sweep_dist, "Distribution")->capture_default_str();
  swp->add_option("-n,--n", sweep.n, "Number of points")->capture_default_str();
  swp->add_option("--k-values", sweep.k_values, "Grid sizes")->delimiter(',')->capture_default_str();
  swp->add_option("--repeats", sweep.repeats, "Timed runs per k")->capture_default_str();
  add_params(swp);

  for (CLI::App* sub : {gen, dia, orc, ben, swp}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto points = maxdist::generate({maxdist::parse_distribution(gen_dist), gen_n, params, g.seed});
      Output out(g.out);
      maxdist::write_points(out.stream(), points);
      out.close();
    } else if (*dia) {
      cmd_diameter(g, in_path, k);
    } else if (*orc) {
      cmd_oracle(g, in_path);
    } else if (*ben) {
      bench.seed = g.seed;
      bench.params = params;
      if (!bench_dists.empty()) {
        bench.distributions.clear();
        for (const auto& name : bench_dists) bench.distributions.push_back(maxdist::parse_distribution(name));
      }
      bool mismatch = false;
      const auto records = maxdist::run_bench(bench, [&](const maxdist::BenchRecord& r) {
        std::cerr << r.distribution << " n=" << r.n << ": " << maxdist::detail::fixed(r.wall_time_ms) << " ms";
        if (r.speedup) std::cerr << ", speedup vs brute force " << maxdist::detail::fixed(*r.speedup, 1) << "x";
        std::cerr << '\n';
        if (r.matches_bf && !*r.matches_bf) {
          std::cerr << "error: " << r.distribution << " n=" << r.n << " disagrees with brute force\n";
          mismatch = true;
        }
      });
      Output out(g.out);
      maxdist::write_bench_csv(out.stream(), records);
      out.close();
      for (const auto& [n, name] : maxdist::fastest_by_size(records)) {
        std::cerr << "note: fastest at n=" << n << " is " << name << '\n';
      }
      if (mismatch) return 2;
    } else if (*swp) {
      sweep.distribution = maxdist::parse_distribution(sweep_dist);
      sweep.seed = g.seed;
      sweep.params = params;
      const auto result = maxdist::run_sweep(sweep);
      Output out(g.out);
      maxdist::write_sweep_csv(out.stream(), result);
      out.close();
      std::cerr << "best k: " << result.records[result.best].k << '\n';
    }
  } catch (const maxdist::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
