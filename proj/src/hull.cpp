#include "naads/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "naads/flow.hpp"

namespace naads {

std::pair<double, double> PointSet::nearest(double x) const {
  std::pair<double, double> best{std::numeric_limits<double>::quiet_NaN(),
                                 std::numeric_limits<double>::infinity()};
  if (sorted_.empty()) return best;
  auto consider = [&](double p) {
    const double d = distance(space_, x, p);
    if (d < best.second) best = {p, d};
  };
  auto it = sorted_.lower_bound(x);
  if (it != sorted_.end()) consider(*it);
  if (it != sorted_.begin()) consider(*std::prev(it));
  if (space_ == SpaceKind::Circle) {
    consider(*sorted_.begin());
    consider(*sorted_.rbegin());
  }
  return best;
}

bool PointSet::contains_near(double x) const { return nearest_distance(x) < eps_; }

bool PointSet::insert(double x) {
  if (contains_near(x)) return false;
  sorted_.insert(x);
  return true;
}

HullSample hull_sample(const MapFamily& family, double x, int order_k, int depth, double dedup_eps,
                       std::size_t max_points) {
  if (order_k < 1 || depth < 1) throw std::invalid_argument("order_k and depth must be >= 1");
  if (!(dedup_eps > 0.0)) throw std::invalid_argument("dedup_eps must be positive");
  const std::size_t cap = effective_point_budget(max_points);

  HullSample hull{x, order_k, depth, dedup_eps, {}, false, false};
  PointSet seen(family.space(), dedup_eps);
  seen.insert(x);
  hull.points.push_back(x);

  std::vector<double> frontier{x};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<double> next;
    for (double p : frontier) {
      for (int r = -order_k; r <= order_k; ++r) {
        if (hull.points.size() >= cap) {
          hull.budget_exhausted = true;
          return hull;
        }
        const double q = omega(family, r, p);
        if (seen.insert(q)) {
          hull.points.push_back(q);
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  hull.stabilized = frontier.empty();
  return hull;
}

double hausdorff_distance(SpaceKind space, const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [space](const std::vector<double>& from, const std::vector<double>& to) {
    PointSet target(space, 0.0);
    for (double y : to) target.insert(y);
    double worst = 0.0;
    for (double x : from) worst = std::max(worst, target.nearest_distance(x));
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace naads
