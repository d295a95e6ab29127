#pragma once

#include <stdexcept>
#include <string>

namespace maxdist {

enum class Errc {
  empty_input,
  too_few_points,
  non_finite_coordinate,
  degenerate_aabb,
  invalid_spec,
  parse_error,
  io_error,
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_input: return "empty-input";
    case Errc::too_few_points: return "too-few-points";
    case Errc::non_finite_coordinate: return "non-finite-coordinate";
    case Errc::degenerate_aabb: return "degenerate-aabb";
    case Errc::invalid_spec: return "invalid-spec";
    case Errc::parse_error: return "parse-error";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace maxdist
