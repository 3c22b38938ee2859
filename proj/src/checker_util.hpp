#pragma once

// Helpers shared by the checker translation units.

#include <cstdint>
#include <string>
#include <vector>

#include "naads/checkers.hpp"
#include "naads/flow.hpp"
#include "naads/report.hpp"

namespace naads::detail {

/// Times in search order: 0, 1, -1, 2, -2, ..., N, -N.
inline std::vector<std::int64_t> search_order(std::int64_t N) {
  std::vector<std::int64_t> out{0};
  for (std::int64_t n = 1; n <= N; ++n) {
    out.push_back(n);
    out.push_back(-n);
  }
  return out;
}

/// Window entry for time n (window spans -N..N).
inline double at(const std::vector<OrbitPoint>& orbit, std::int64_t n) {
  const auto N = static_cast<std::int64_t>(orbit.size() / 2);
  return orbit[static_cast<std::size_t>(N + n)].x;
}

inline std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += format_double(values[i]);
  }
  return s;
}

inline std::string join(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += format_int(values[i]);
  }
  return s;
}

inline void record_sampling(PropertyReport& rep, const SamplingOptions& opts) {
  rep.param("samples", format_int(static_cast<std::int64_t>(opts.samples)));
  rep.param("sampling", opts.random ? "random" : "lowdisc");
  rep.param("seed", std::to_string(opts.seed));
}

/// Orbit of one point evaluated on demand, for searches that usually stop
/// early. Forward values are extended incrementally; backward values are
/// computed from scratch. Both agree bit for bit with omega().
class LazyOrbit {
 public:
  LazyOrbit(const MapFamily& family, double x) : family_(family), forward_{x} {}

  double at(std::int64_t n) {
    if (n < 0) return omega(family_, n, forward_[0]);
    while (static_cast<std::int64_t>(forward_.size()) <= n) {
      const auto i = static_cast<std::int64_t>(forward_.size());
      forward_.push_back(family_.map(i).forward(forward_.back()));
    }
    return forward_[static_cast<std::size_t>(n)];
  }

 private:
  const MapFamily& family_;
  std::vector<double> forward_;
};

/// Return times inside [-N, N] read off a (possibly wider) orbit window.
ReturnTimeSet returns_from_orbit(SpaceKind space, const std::vector<OrbitPoint>& orbit, double x,
                                 double eps, std::int64_t N);

}  // namespace naads::detail
