// Periodicity, return times, and almost periodicity.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "checker_util.hpp"
#include "naads/errors.hpp"
#include "naads/hull.hpp"

namespace naads {

namespace detail {

ReturnTimeSet returns_from_orbit(SpaceKind space, const std::vector<OrbitPoint>& orbit, double x,
                                 double eps, std::int64_t N) {
  ReturnTimeSet set;
  set.base = x;
  set.eps = eps;
  set.window = N;
  for (const auto& [n, y] : orbit) {
    if (n < -N || n > N) continue;
    if (distance(space, y, x) < eps) set.times.push_back(n);
  }
  // n = 0 always returns, so times is never empty.
  for (std::size_t i = 1; i < set.times.size(); ++i) {
    set.max_internal_gap = std::max(set.max_internal_gap, set.times[i] - set.times[i - 1]);
  }
  set.censored_left_gap = set.times.front() + N;
  set.censored_right_gap = N - set.times.back();
  return set;
}

}  // namespace detail

void require_commutative(const MapFamily& family, std::string_view checker) {
  if (!family.declared_commutative()) {
    throw PreconditionError(std::string(checker) + ": family '" + family.name() +
                            "' is not declared commutative");
  }
  const auto audit = audit_commutativity(family);
  if (!audit.passed) {
    throw PreconditionError(std::string(checker) + ": family '" + family.name() +
                            "' fails the commutativity audit (f_" + std::to_string(audit.i) + ", f_" +
                            std::to_string(audit.j) + " at x=" + format_double(audit.x) +
                            ", distance " + format_double(audit.worst_distance) + ")");
  }
}

PropertyReport periodicity_check(const MapFamily& family, double x, std::int64_t r, std::int64_t horizon,
                                 double tol) {
  if (r < 1) throw std::invalid_argument("periodicity_check: r must be >= 1");
  PropertyReport rep;
  rep.property = Property::Periodicity;
  rep.param("x", format_double(x));
  rep.param("r", format_int(r));
  rep.param("horizon", format_int(horizon));
  rep.param("tol", format_double(tol));

  const SpaceKind s = family.space();
  const auto* ex = family.exact_view();
  double max_dev = 0.0;
  bool failed = false;
  for (std::int64_t j = 1; j <= horizon && !failed; ++j) {
    for (std::int64_t n : {j * r, -j * r}) {
      const double d = distance(s, omega(family, n, x), x);
      max_dev = std::max(max_dev, d);
      if (d > tol && !ex) {
        rep.witnesses.push_back({WitnessKind::SelfReturn, {x}, n, d, "first multiple of r with d > tol"});
        failed = true;
        break;
      }
    }
  }
  rep.detail("max_deviation", format_double(max_dev));

  if (ex) {
    const auto exact = exact::exact_periodicity(*ex, r, horizon);
    rep.detail("exact", "yes");
    if (exact.certified) {
      rep.verdict = Verdict::Certified;
    } else {
      rep.verdict = Verdict::Refuted;
      const std::int64_t n = exact.witness_n;
      rep.detail("exact_displacement", exact.witness_displacement.str());
      rep.witnesses.push_back({WitnessKind::SelfReturn, {x}, n, distance(s, omega(family, n, x), x),
                               "first multiple of r with nonzero exact displacement"});
    }
    return rep;
  }
  rep.verdict = failed ? Verdict::Refuted : Verdict::EvidenceFor;
  return rep;
}

PropertyReport exact_periodicity_report(const MapFamily& family, std::int64_t r, std::int64_t horizon) {
  const auto* ex = family.exact_view();
  if (!ex) throw PreconditionError("exact_periodicity: family '" + family.name() + "' has no exact rotation view");
  PropertyReport rep;
  rep.property = Property::Periodicity;
  rep.param("r", format_int(r));
  rep.param("horizon", format_int(horizon));
  const auto exact = exact::exact_periodicity(*ex, r, horizon);
  if (exact.certified) {
    rep.verdict = Verdict::Certified;
    return rep;
  }
  rep.verdict = Verdict::Refuted;
  rep.detail("witness_n", format_int(exact.witness_n));
  rep.detail("exact_displacement", exact.witness_displacement.str());
  const double d = distance(family.space(), omega(family, exact.witness_n, 0.0), 0.0);
  rep.witnesses.push_back({WitnessKind::SelfReturn, {0.0}, exact.witness_n, d, "displacement of omega_n"});
  return rep;
}

ReturnTimeSet return_time_set(const MapFamily& family, double x, double eps, std::int64_t N) {
  if (!(eps > 0.0) || N < 1) throw std::invalid_argument("return_time_set: need eps > 0 and N >= 1");
  return detail::returns_from_orbit(family.space(), orbit_window(family, x, N), x, eps, N);
}

PropertyReport almost_periodicity_report(const MapFamily& family, double x, double eps, std::int64_t N) {
  if (!(eps > 0.0) || N < 1) throw std::invalid_argument("almost_periodicity_report: need eps > 0 and N >= 1");
  PropertyReport rep;
  rep.property = Property::AlmostPeriodicity;
  rep.param("x", format_double(x));
  rep.param("eps", format_double(eps));
  rep.param("N", format_int(N));

  const auto orbit = orbit_window(family, x, 4 * N);
  std::vector<ReturnTimeSet> sets;
  for (std::int64_t w : {N, 2 * N, 4 * N}) sets.push_back(detail::returns_from_orbit(family.space(), orbit, x, eps, w));

  std::vector<std::int64_t> censored;
  std::int64_t bound = 0;
  for (const auto& s : sets) {
    censored.push_back(s.censored_gap());
    bound = std::max(bound, s.worst_gap());
  }
  rep.detail("windows", detail::join(std::vector<std::int64_t>{N, 2 * N, 4 * N}));
  rep.detail("censored_gap_trend", detail::join(censored));
  rep.detail("max_internal_gap", format_int(sets.back().max_internal_gap));

  const auto& widest = sets.back();
  const std::int64_t last = widest.times.back();
  rep.witnesses.push_back({WitnessKind::SelfReturn, {x}, last, distance(family.space(), detail::at(orbit, last), x),
                           "latest return in the widest window"});

  if (censored[0] < censored[1] && censored[1] < censored[2]) {
    rep.verdict = Verdict::EvidenceAgainst;
  } else {
    rep.verdict = Verdict::EvidenceFor;
    rep.detail("M", format_int(bound));
  }
  return rep;
}

PropertyReport uniform_ap_report(const MapFamily& family, double eps, std::int64_t N, std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("uniform_ap_report: grid_size must be >= 2");
  PropertyReport rep;
  rep.property = Property::UniformAlmostPeriodicity;
  rep.param("eps", format_double(eps));
  rep.param("N", format_int(N));
  rep.param("grid", format_int(static_cast<std::int64_t>(grid_size)));

  std::int64_t common_bound = 0;
  std::int64_t worst_censored = -1;
  std::size_t against = 0;
  PropertyReport worst;
  double worst_x = 0.0;
  for (double x : uniform_grid(family.space(), grid_size)) {
    PropertyReport r = almost_periodicity_report(family, x, eps, N);
    if (r.verdict == Verdict::EvidenceFor) {
      common_bound = std::max<std::int64_t>(common_bound, std::stoll(r.detail_value("M")));
      continue;
    }
    ++against;
    const std::string trend = r.detail_value("censored_gap_trend");
    const std::int64_t c = std::stoll(trend.substr(trend.rfind(',') + 1));
    if (c > worst_censored) {
      worst_censored = c;
      worst = std::move(r);
      worst_x = x;
    }
  }
  if (against == 0) {
    rep.verdict = Verdict::EvidenceFor;
    rep.detail("M", format_int(common_bound));
    return rep;
  }
  rep.verdict = Verdict::EvidenceAgainst;
  rep.detail("points_against", format_int(static_cast<std::int64_t>(against)));
  rep.detail("worst_point", format_double(worst_x));
  rep.detail("worst_censored_gap_trend", worst.detail_value("censored_gap_trend"));
  rep.witnesses = worst.witnesses;
  return rep;
}

PropertyReport hull_periodicity_property(const MapFamily& family, double x, std::int64_t r, int order_k, int depth,
                                         std::int64_t horizon, double tol) {
  require_commutative(family, "hull_periodicity_property");
  const PropertyReport base = periodicity_check(family, x, r, horizon, tol);
  if (!is_positive(base.verdict)) {
    throw PreconditionError("hull_periodicity_property: base point " + format_double(x) +
                            " is not periodic with period " + format_int(r));
  }
  PropertyReport rep;
  rep.property = Property::HullPeriodicity;
  rep.param("x", format_double(x));
  rep.param("r", format_int(r));
  rep.param("order_k", format_int(order_k));
  rep.param("depth", format_int(depth));
  rep.param("horizon", format_int(horizon));
  rep.param("tol", format_double(tol));

  const HullSample hull = hull_sample(family, x, order_k, depth);
  std::int64_t failing = 0;
  for (double p : hull.points) {
    PropertyReport pr = periodicity_check(family, p, r, horizon, tol);
    if (is_positive(pr.verdict)) continue;
    ++failing;
    for (auto& w : pr.witnesses) rep.witnesses.push_back(std::move(w));
  }
  rep.detail("hull_points", format_int(static_cast<std::int64_t>(hull.points.size())));
  rep.detail("failing_points", format_int(failing));
  rep.detail("budget_exhausted", hull.budget_exhausted ? "yes" : "no");
  rep.verdict = failing == 0 ? Verdict::EvidenceFor : Verdict::Refuted;
  return rep;
}

PropertyReport ap_propagation_check(const MapFamily& family, double x, double eps, std::int64_t N, int order_k,
                                    int depth) {
  require_commutative(family, "ap_propagation_check");
  const PropertyReport base = almost_periodicity_report(family, x, eps, N);
  if (base.verdict != Verdict::EvidenceFor) {
    throw PreconditionError("ap_propagation_check: base point " + format_double(x) +
                            " shows no almost periodicity evidence at eps=" + format_double(eps));
  }
  PropertyReport rep;
  rep.property = Property::AlmostPeriodicityPropagation;
  rep.param("x", format_double(x));
  rep.param("eps", format_double(eps));
  rep.param("N", format_int(N));
  rep.param("order_k", format_int(order_k));
  rep.param("depth", format_int(depth));

  const double hull_eps = 3.0 * eps;
  const HullSample hull = hull_sample(family, x, order_k, depth);
  std::int64_t bound = 0;
  std::int64_t failing = 0;
  for (double p : hull.points) {
    PropertyReport pr = almost_periodicity_report(family, p, hull_eps, N);
    if (pr.verdict == Verdict::EvidenceFor) {
      bound = std::max<std::int64_t>(bound, std::stoll(pr.detail_value("M")));
      continue;
    }
    ++failing;
    for (auto& w : pr.witnesses) rep.witnesses.push_back(std::move(w));
  }
  rep.detail("hull_eps", format_double(hull_eps));
  rep.detail("hull_points", format_int(static_cast<std::int64_t>(hull.points.size())));
  rep.detail("failing_points", format_int(failing));
  if (failing == 0) {
    rep.verdict = Verdict::EvidenceFor;
    rep.detail("M", format_int(bound));
  } else {
    rep.verdict = Verdict::EvidenceAgainst;
  }
  return rep;
}

}  // namespace naads
