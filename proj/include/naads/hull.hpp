#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "naads/budget.hpp"
#include "naads/family.hpp"

namespace naads {

/// Sorted point store rejecting points closer than `eps` to a stored one.
/// Wrap-aware on the circle.
class PointSet {
 public:
  PointSet(SpaceKind space, double eps) : space_(space), eps_(eps) {}

  /// Inserts x unless a stored point lies within eps; returns true if stored.
  bool insert(double x);
  bool contains_near(double x) const;
  /// Distance from x to the nearest stored point (infinity if empty).
  double nearest_distance(double x) const { return nearest(x).second; }
  /// Nearest stored point and its distance; (nan, infinity) if empty.
  std::pair<double, double> nearest(double x) const;
  std::size_t size() const { return sorted_.size(); }

 private:
  SpaceKind space_;
  double eps_;
  std::set<double> sorted_;
};

/// Finite approximation of the order-k truncated orbital hull of `base`.
struct HullSample {
  double base = 0.0;
  int order_k = 1;
  int depth = 1;
  double dedup_eps = 1e-9;
  /// Discovery order: by word length, then by index r ascending.
  std::vector<double> points;
  bool budget_exhausted = false;
  /// True when the breadth-first frontier emptied: the set is closed under
  /// omega_r for |r| <= order_k (up to dedup_eps).
  bool stabilized = false;
};

/// Breadth-first enumeration of omega_{r_m} o ... o omega_{r_1}(x) with
/// r_i in [-order_k, order_k] and m <= depth.
HullSample hull_sample(const MapFamily& family, double x, int order_k, int depth,
                       double dedup_eps = 1e-9, std::size_t max_points = kDefaultMaxPoints);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(SpaceKind space, const std::vector<double>& a, const std::vector<double>& b);

}  // namespace naads
