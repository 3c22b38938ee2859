#include "naads/flow.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "naads/errors.hpp"

namespace naads {
namespace {

void check_horizon(std::int64_t n, std::int64_t horizon) {
  if (std::llabs(n) > horizon) {
    throw BudgetError("|n| = " + std::to_string(std::llabs(n)) + " exceeds flow horizon " +
                      std::to_string(horizon));
  }
}

double backward(const std::vector<const Homeomorphism*>& fs, std::int64_t m, double x) {
  for (std::int64_t i = m - 1; i >= 0; --i) x = fs[static_cast<std::size_t>(i)]->inverse(x);
  return x;
}

}  // namespace

double omega(const MapFamily& family, std::int64_t n, double x, std::int64_t horizon) {
  check_horizon(n, horizon);
  if (!contains(family.space(), x)) {
    throw DomainError("point " + std::to_string(x) + " outside " + std::string(to_string(family.space())));
  }
  if (n == 0) return x;
  const std::int64_t m = std::llabs(n);
  const auto fs = family.maps_upto(m);
  if (n > 0) {
    for (const auto* f : fs) x = f->forward(x);
    return x;
  }
  return backward(fs, m, x);
}

std::vector<OrbitPoint> orbit_window(const MapFamily& family, double x, std::int64_t N,
                                     std::int64_t horizon) {
  if (N < 0) throw std::invalid_argument("orbit window size must be >= 0");
  check_horizon(N, horizon);
  if (!contains(family.space(), x)) {
    throw DomainError("point " + std::to_string(x) + " outside " + std::string(to_string(family.space())));
  }
  const auto fs = family.maps_upto(N);
  std::vector<OrbitPoint> out(static_cast<std::size_t>(2 * N + 1));
  out[static_cast<std::size_t>(N)] = {0, x};
  double y = x;
  for (std::int64_t n = 1; n <= N; ++n) {
    y = fs[static_cast<std::size_t>(n - 1)]->forward(y);
    out[static_cast<std::size_t>(N + n)] = {n, y};
  }
  for (std::int64_t n = 1; n <= N; ++n) {
    out[static_cast<std::size_t>(N - n)] = {-n, backward(fs, n, x)};
  }
  return out;
}

double FlowCache::omega(std::int64_t n, double x) {
  check_horizon(n, horizon_);
  if (!contains(family_.space(), x)) {
    throw DomainError("point " + std::to_string(x) + " outside " + std::string(to_string(family_.space())));
  }
  if (n == 0) return x;
  std::lock_guard lock(mutex_);
  Trajectory& t = memo_[std::bit_cast<std::uint64_t>(x)];
  if (n > 0) {
    if (t.forward.empty()) t.forward.push_back(x);
    if (static_cast<std::int64_t>(t.forward.size()) <= n) {
      const auto fs = family_.maps_upto(n);
      while (static_cast<std::int64_t>(t.forward.size()) <= n) {
        const auto i = t.forward.size();
        t.forward.push_back(fs[i - 1]->forward(t.forward.back()));
      }
    }
    return t.forward[static_cast<std::size_t>(n)];
  }
  if (auto it = t.backward.find(n); it != t.backward.end()) return it->second;
  const double v = backward(family_.maps_upto(-n), -n, x);
  t.backward.emplace(n, v);
  return v;
}

std::size_t FlowCache::cached_points() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

CommutativityAudit audit_commutativity(const MapFamily& family, std::int64_t max_index,
                                       std::size_t grid, double tol) {
  CommutativityAudit audit;
  const auto xs = uniform_grid(family.space(), grid);
  const auto fs = family.maps_upto(max_index);
  for (std::int64_t i = 1; i <= max_index; ++i) {
    for (std::int64_t j = i + 1; j <= max_index; ++j) {
      const auto& fi = *fs[static_cast<std::size_t>(i - 1)];
      const auto& fj = *fs[static_cast<std::size_t>(j - 1)];
      for (double x : xs) {
        const double d = distance(family.space(), fi.forward(fj.forward(x)), fj.forward(fi.forward(x)));
        if (d > audit.worst_distance) audit = {true, d, i, j, x};
      }
    }
  }
  audit.passed = audit.worst_distance <= tol;
  return audit;
}

IsometryAudit audit_isometry(const MapFamily& family, std::int64_t horizon, std::size_t grid,
                             double tol) {
  IsometryAudit audit;
  const auto xs = uniform_grid(family.space(), grid);
  std::vector<std::vector<OrbitPoint>> orbits;
  orbits.reserve(xs.size());
  for (double x : xs) orbits.push_back(orbit_window(family, x, horizon));
  const SpaceKind s = family.space();
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      const double d0 = distance(s, xs[a], xs[b]);
      for (std::size_t k = 0; k < orbits[a].size(); ++k) {
        const double err = std::fabs(distance(s, orbits[a][k].x, orbits[b][k].x) - d0);
        if (err > audit.worst_error) audit = {true, err, orbits[a][k].n, xs[a], xs[b]};
      }
    }
  }
  audit.passed = audit.worst_error <= tol;
  return audit;
}

InversionAudit audit_inversion(const MapFamily& family, std::int64_t horizon, std::size_t grid,
                               double tol) {
  InversionAudit audit;
  const auto xs = uniform_grid(family.space(), grid);
  for (double x : xs) {
    for (const auto& [n, y] : orbit_window(family, x, horizon)) {
      const double err = distance(family.space(), omega(family, -n, y), x);
      if (err > audit.worst_error) audit = {true, err, n, x};
    }
  }
  audit.passed = audit.worst_error <= tol;
  return audit;
}

}  // namespace naads
