#pragma once

// Two-sided flow of a non-autonomous system.
//
//   omega_n    = f_n o ... o f_1            (n >= 1)
//   omega_0    = identity
//   omega_{-n} = (omega_n)^{-1} = f_1^{-1} o ... o f_n^{-1}
//
// The backward flow inverts the forward composition as a whole, so it is not
// built incrementally from omega_{-(n-1)} unless the maps commute.

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "naads/budget.hpp"
#include "naads/family.hpp"

namespace naads {

double omega(const MapFamily& family, std::int64_t n, double x,
             std::int64_t horizon = kDefaultHorizon);

struct OrbitPoint {
  std::int64_t n;
  double x;
};

/// omega_n(x) for n = -N..N in ascending n (length 2N+1).
std::vector<OrbitPoint> orbit_window(const MapFamily& family, double x, std::int64_t N,
                                     std::int64_t horizon = kDefaultHorizon);

/// Memoized omega evaluation. Values are bit-identical to omega(); the cache
/// is internally synchronized.
class FlowCache {
 public:
  explicit FlowCache(MapFamily family, std::int64_t horizon = kDefaultHorizon)
      : family_(std::move(family)), horizon_(horizon) {}

  const MapFamily& family() const { return family_; }
  double omega(std::int64_t n, double x);
  std::size_t cached_points() const;

 private:
  struct Trajectory {
    std::vector<double> forward;   // forward[n] = omega_n(x), forward[0] = x
    std::unordered_map<std::int64_t, double> backward;
  };

  MapFamily family_;
  std::int64_t horizon_;
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, Trajectory> memo_;
};

struct CommutativityAudit {
  bool passed = true;
  double worst_distance = 0.0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  double x = 0.0;
};

/// Samples d(f_i(f_j(x)), f_j(f_i(x))) for 1 <= i < j <= max_index over a grid.
CommutativityAudit audit_commutativity(const MapFamily& family, std::int64_t max_index = 12,
                                       std::size_t grid = 17, double tol = 1e-9);

struct IsometryAudit {
  bool passed = true;
  double worst_error = 0.0;
  std::int64_t n = 0;
  double x = 0.0;
  double y = 0.0;
};

/// Samples |d(omega_n x, omega_n y) - d(x, y)| for |n| <= horizon over grid pairs.
IsometryAudit audit_isometry(const MapFamily& family, std::int64_t horizon, std::size_t grid,
                             double tol = 1e-12);

struct InversionAudit {
  bool passed = true;
  double worst_error = 0.0;
  std::int64_t n = 0;
  double x = 0.0;
};

/// Samples d(omega_{-n}(omega_n(x)), x) for |n| <= horizon.
InversionAudit audit_inversion(const MapFamily& family, std::int64_t horizon, std::size_t grid,
                               double tol = 1e-9);

}  // namespace naads
