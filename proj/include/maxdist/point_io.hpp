#pragma once

// Point files: UTF-8 CSV with header `x,y`, one point per line, shortest
// round-trip decimal formatting.

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "maxdist/error.hpp"
#include "maxdist/geometry.hpp"

namespace maxdist {

/// Shortest decimal string that parses back to exactly `value`.
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, res.ptr};
}

inline void write_points(std::ostream& out, const std::vector<Point>& points) {
  out << "x,y\n";
  for (const Point& p : points) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

inline void write_points_file(const std::string& path, const std::vector<Point>& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  write_points(out, points);
  if (!out) throw Error(Errc::io_error, "write to '" + path + "' failed");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool parse_coordinate(std::string_view field, double& value) {
  field = trim(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  return res.ec == std::errc{} && res.ptr == field.data() + field.size() && std::isfinite(value);
}

}  // namespace detail

/// Reads a point file. The `x,y` header is optional; blank lines are skipped.
inline std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim(line);
    if (text.empty()) continue;
    if (!seen_content) {
      seen_content = true;
      if (text == "x,y") continue;
    }
    const auto comma = text.find(',');
    Point p;
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos ||
        !detail::parse_coordinate(text.substr(0, comma), p.x) ||
        !detail::parse_coordinate(text.substr(comma + 1), p.y)) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'x,y' with finite numbers, got '" +
                                         std::string(text) + "'");
    }
    points.push_back(p);
  }
  return points;
}

inline std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  return read_points(in);
}

}  // namespace maxdist
