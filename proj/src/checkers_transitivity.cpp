// Orbit density, transitivity, and minimality.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "checker_util.hpp"
#include "naads/exact_circle.hpp"

namespace naads {

namespace {

struct Coverage {
  bool covered = true;
  double worst = 0.0;
  double worst_center = 0.0;
  double nearest_point = 0.0;
};

Coverage cover(const PointSet& pts, const std::vector<double>& centers, double eps) {
  Coverage c;
  c.worst = -1.0;
  for (double z : centers) {
    const auto [p, d] = pts.nearest(z);
    if (d > c.worst) {
      c.worst = d;
      c.worst_center = z;
      c.nearest_point = p;
    }
    if (!(d < eps)) c.covered = false;
  }
  return c;
}

Witness miss_witness(const Coverage& c, const char* note) {
  return {WitnessKind::Static, {c.worst_center, c.nearest_point}, 0, c.worst, note};
}

}  // namespace

PropertyReport orbit_density(const MapFamily& family, double x, double eps, std::int64_t N) {
  if (!(eps > 0.0)) throw std::invalid_argument("orbit_density: eps must be positive");
  PropertyReport rep;
  rep.property = Property::OrbitDensity;
  rep.param("x", format_double(x));
  rep.param("eps", format_double(eps));
  rep.param("N", format_int(N));

  const SpaceKind s = family.space();
  PointSet orbit(s, 0.0);
  for (const auto& [n, y] : orbit_window(family, x, N)) orbit.insert(y);
  const auto centers = spacing_net(s, eps);
  const Coverage c = cover(orbit, centers, eps);
  rep.detail("net_size", format_int(static_cast<std::int64_t>(centers.size())));
  rep.detail("distinct_orbit_points", format_int(static_cast<std::int64_t>(orbit.size())));
  rep.detail("worst_gap", format_double(c.worst));
  if (!c.covered) rep.witnesses.push_back(miss_witness(c, "net center far from the orbit window"));
  rep.verdict = c.covered ? Verdict::EvidenceFor : Verdict::EvidenceAgainst;
  return rep;
}

PropertyReport transitivity_scan(const MapFamily& family, double eps, std::int64_t N, std::size_t grid,
                                 const SamplingOptions& opts) {
  if (grid < 2) throw std::invalid_argument("transitivity_scan: grid must be >= 2");
  if (!(eps > 0.0)) throw std::invalid_argument("transitivity_scan: eps must be positive");
  PropertyReport rep;
  rep.property = Property::Transitivity;
  rep.param("eps", format_double(eps));
  rep.param("N", format_int(N));
  rep.param("grid", format_int(static_cast<std::int64_t>(grid)));
  detail::record_sampling(rep, opts);

  const SpaceKind s = family.space();

  // (a) a grid point with an eps-dense orbit window.
  Verdict dense = Verdict::EvidenceAgainst;
  std::string dense_point = "none";
  for (double x : uniform_grid(s, grid)) {
    if (orbit_density(family, x, eps, N).verdict == Verdict::EvidenceFor) {
      dense = Verdict::EvidenceFor;
      dense_point = format_double(x);
      break;
    }
  }

  // (b) every ordered pair of net balls connected by some omega_k.
  const auto centers = spacing_net(s, eps);
  Verdict open_sets = Verdict::EvidenceFor;
  for (double u : centers) {
    PointSet reached(s, 0.0);
    for (double p : ball_samples(s, u, eps, opts)) {
      for (const auto& [n, y] : orbit_window(family, p, N)) reached.insert(y);
    }
    const Coverage c = cover(reached, centers, eps);
    if (!c.covered) {
      open_sets = Verdict::EvidenceAgainst;
      rep.detail("unconnected_from", format_double(u));
      rep.detail("unconnected_to", format_double(c.worst_center));
      rep.witnesses.push_back(miss_witness(c, "ball never reached from the source ball"));
      break;
    }
  }

  rep.detail("dense_orbit", std::string(to_string(dense)));
  rep.detail("dense_orbit_point", dense_point);
  rep.detail("open_set_scan", std::string(to_string(open_sets)));
  rep.detail("subverdicts_agree", dense == open_sets ? "yes" : "no");
  rep.verdict = dense == open_sets ? dense : Verdict::InconclusiveBudget;
  return rep;
}

PropertyReport r_transitivity_check(const MapFamily& family, std::int64_t r, double eps, std::int64_t N,
                                    std::size_t grid, const SamplingOptions& opts) {
  if (r < 1) throw std::invalid_argument("r_transitivity_check: r must be >= 1");
  const MapFamily blocks = block_family(family, r);
  PropertyReport scan = transitivity_scan(blocks, eps, N, grid, opts);
  PropertyReport rep;
  rep.property = Property::RTransitivity;
  rep.verdict = scan.verdict;
  rep.param("r", format_int(r));
  for (auto& kv : scan.parameters) rep.parameters.push_back(std::move(kv));
  rep.details = std::move(scan.details);
  rep.witnesses = std::move(scan.witnesses);
  if (const auto* ex = blocks.exact_view()) {
    bool identity = true;
    for (std::int64_t k = 1; k <= N && identity; ++k) identity = ex->step(k).is_zero();
    rep.detail("identity_blocks_exact", identity ? "yes" : "no");
  }
  return rep;
}

namespace {

struct Miss {
  double x = 0.0;
  double center = 0.0;
};

// Exact search over rotation families: the hull of x is x plus the exact
// displacement hull, so one enumeration serves every grid point.
PropertyReport exact_minimality(const MapFamily& family, const exact::RationalRotationFamily& ex, double eps,
                                int order_cap, int depth, const std::vector<double>& grid,
                                const std::vector<double>& centers, std::int64_t invariance_horizon,
                                PropertyReport rep) {
  const mpq_class eps_q(eps);
  std::vector<exact::RationalAngle> grid_q, centers_q;
  for (double x : grid) grid_q.push_back(exact::RationalAngle::from_double(x));
  for (double z : centers) centers_q.push_back(exact::RationalAngle::from_double(z));

  bool exhausted = false;
  for (int k = 1; k <= order_cap; ++k) {
    const exact::ExactHull hull = exact::exact_hull_displacements(ex, k, depth);
    exhausted = exhausted || hull.budget_exhausted;
    std::optional<Miss> miss;
    for (std::size_t i = 0; i < grid_q.size() && !miss; ++i) {
      for (std::size_t j = 0; j < centers_q.size() && !miss; ++j) {
        bool hit = false;
        for (const auto& h : hull.angles) {
          if (exact::circle_distance(grid_q[i] + h, centers_q[j]) < eps_q) {
            hit = true;
            break;
          }
        }
        if (!hit) miss = Miss{grid[i], centers[j]};
      }
    }
    if (!miss) {
      rep.verdict = Verdict::Certified;
      rep.detail("k", format_int(k));
      rep.detail("hull_size", format_int(static_cast<std::int64_t>(hull.angles.size())));
      rep.detail("density_gap", exact::exact_density_gap(hull.angles).get_str());
      rep.detail("exact", "yes");
      return rep;
    }
    if (hull.stabilized && !hull.budget_exhausted) {
      bool invariant = true;
      for (std::int64_t r = -invariance_horizon; r <= invariance_horizon && invariant; ++r) {
        const auto d = ex.displacement(r);
        for (const auto& h : hull.angles) {
          if (!std::binary_search(hull.angles.begin(), hull.angles.end(), h + d)) {
            invariant = false;
            break;
          }
        }
      }
      if (invariant) {
        rep.verdict = Verdict::Refuted;
        rep.detail("k", format_int(k));
        rep.detail("witness_x", format_double(miss->x));
        rep.detail("missed_center", format_double(miss->center));
        rep.detail("hull_size", format_int(static_cast<std::int64_t>(hull.angles.size())));
        rep.detail("exact", "yes");
        double nearest = miss->x;
        double best = 2.0;
        for (const auto& h : hull.angles) {
          const double p = (exact::RationalAngle::from_double(miss->x) + h).to_double();
          const double dd = distance(family.space(), p, miss->center);
          if (dd < best) {
            best = dd;
            nearest = p;
          }
        }
        rep.witnesses.push_back({WitnessKind::Static, {nearest, miss->center}, 0, best,
                                 "closed hull point nearest the missed ball"});
        return rep;
      }
    }
  }
  rep.verdict = Verdict::InconclusiveBudget;
  rep.detail("budget_exhausted", exhausted ? "yes" : "no");
  rep.detail("exact", "yes");
  return rep;
}

// Whether every hull point is mapped back into the hull by omega_r, |r| <= horizon.
bool closed_under_flow(const MapFamily& family, const HullSample& hull, std::int64_t horizon) {
  PointSet pts(family.space(), hull.dedup_eps);
  for (double p : hull.points) pts.insert(p);
  for (double p : hull.points) {
    for (std::int64_t r = -horizon; r <= horizon; ++r) {
      if (!pts.contains_near(omega(family, r, p))) return false;
    }
  }
  return true;
}

}  // namespace

PropertyReport minimality_certificate(const MapFamily& family, double eps, int order_cap, int depth,
                                      double grid_spacing, std::int64_t invariance_horizon) {
  if (!(eps > 0.0)) throw std::invalid_argument("minimality_certificate: eps must be positive");
  if (order_cap < 1 || depth < 1) throw std::invalid_argument("minimality_certificate: order_cap and depth must be >= 1");
  if (grid_spacing <= 0.0) grid_spacing = eps / 2.0;
  if (grid_spacing > eps / 2.0) {
    throw std::invalid_argument("minimality_certificate: grid spacing must not exceed eps/2");
  }
  PropertyReport rep;
  rep.property = Property::Minimality;
  rep.param("eps", format_double(eps));
  rep.param("order_cap", format_int(order_cap));
  rep.param("depth", format_int(depth));
  rep.param("grid_spacing", format_double(grid_spacing));
  rep.param("invariance_horizon", format_int(invariance_horizon));

  const SpaceKind s = family.space();
  const auto grid = spacing_net(s, grid_spacing);
  const auto& centers = grid;
  rep.detail("grid_size", format_int(static_cast<std::int64_t>(grid.size())));

  if (const auto* ex = family.exact_view()) {
    return exact_minimality(family, *ex, eps, order_cap, depth, grid, centers, invariance_horizon, std::move(rep));
  }

  bool exhausted = false;
  for (int k = 1; k <= order_cap; ++k) {
    bool all_met = true;
    for (double x : grid) {
      const HullSample hull = hull_sample(family, x, k, depth);
      exhausted = exhausted || hull.budget_exhausted;
      PointSet pts(s, 0.0);
      for (double p : hull.points) pts.insert(p);
      const Coverage c = cover(pts, centers, eps);
      if (c.covered) continue;
      all_met = false;
      if (hull.stabilized && !hull.budget_exhausted && closed_under_flow(family, hull, invariance_horizon)) {
        rep.verdict = Verdict::Refuted;
        rep.detail("k", format_int(k));
        rep.detail("witness_x", format_double(x));
        rep.detail("missed_center", format_double(c.worst_center));
        rep.detail("hull_size", format_int(static_cast<std::int64_t>(hull.points.size())));
        rep.witnesses.push_back(miss_witness(c, "closed hull point nearest the missed ball"));
        return rep;
      }
    }
    if (all_met) {
      rep.verdict = Verdict::EvidenceFor;
      rep.detail("k", format_int(k));
      return rep;
    }
  }
  rep.verdict = Verdict::InconclusiveBudget;
  rep.detail("budget_exhausted", exhausted ? "yes" : "no");
  return rep;
}

}  // namespace naads
