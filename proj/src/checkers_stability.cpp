// Equicontinuity, proximality, sensitivity, and the hull-level results that
// depend on them.

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "checker_util.hpp"
#include "naads/errors.hpp"

namespace naads {

namespace {

// Partner offsets, as multiples of delta, tried around each base point.
constexpr double kPartnerOffsets[] = {-(1.0 - 0x1p-12), -0.5, 0.5, 1.0 - 0x1p-12};
constexpr int kDyadicLevels = 20;

struct Pair {
  double x;
  double y;
};

std::vector<Pair> partner_pairs(SpaceKind s, const std::vector<double>& bases, double delta) {
  std::vector<Pair> pairs;
  for (double b : bases) {
    for (double t : kPartnerOffsets) {
      double y = b + t * delta;
      if (s == SpaceKind::UnitInterval && (y < 0.0 || y > 1.0)) continue;
      y = normalize(s, y);
      if (!(distance(s, b, y) < delta)) continue;
      pairs.push_back({b, y});
    }
  }
  return pairs;
}

// Sampled diameter of a point cloud and the pair attaining it.
struct Spread {
  double diameter = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

Spread spread(SpaceKind s, const std::vector<double>& pts) {
  Spread out;
  if (s == SpaceKind::UnitInterval) {
    const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    out.i = static_cast<std::size_t>(lo - pts.begin());
    out.j = static_cast<std::size_t>(hi - pts.begin());
    out.diameter = *hi - *lo;
    return out;
  }
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const double d = distance(s, pts[a], pts[b]);
      if (d > out.diameter) out = {d, a, b};
    }
  }
  return out;
}

}  // namespace

std::vector<double> ball_samples(SpaceKind space, double x, double r, const SamplingOptions& opts) {
  if (!(r > 0.0)) throw std::invalid_argument("ball radius must be positive");
  if (opts.samples < 2) throw std::invalid_argument("need at least 2 samples per ball");
  const double reach = r * (1.0 - 1e-9);
  auto place = [&](double offset) {
    const double y = x + offset;
    return space == SpaceKind::UnitInterval ? std::clamp(y, 0.0, 1.0) : normalize(space, y);
  };
  std::vector<double> pts{x, place(-reach)};
  if (opts.samples >= 3) pts.push_back(place(reach));
  std::mt19937_64 rng(opts.seed ^ std::bit_cast<std::uint64_t>(x) ^ (std::bit_cast<std::uint64_t>(r) << 1));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t i = 2; pts.size() < opts.samples; ++i) {
    const double u = opts.random ? unit(rng) : 2.0 * van_der_corput(i) - 1.0;
    pts.push_back(place(u * reach));
  }
  return pts;
}

double equicontinuity_delta(const MapFamily& family, double eps, std::int64_t N, std::size_t pair_grid,
                            Witness* blocking) {
  if (!(eps > 0.0) || N < 0) throw std::invalid_argument("equicontinuity_delta: need eps > 0 and N >= 0");
  const SpaceKind s = family.space();
  const auto bases = uniform_grid(s, pair_grid);
  std::vector<std::vector<OrbitPoint>> orbits(bases.size());
  auto base_orbit = [&](std::size_t idx) -> const std::vector<OrbitPoint>& {
    if (orbits[idx].empty()) orbits[idx] = orbit_window(family, bases[idx], N);
    return orbits[idx];
  };
  auto base_index = [&](double b) {
    return static_cast<std::size_t>(std::find(bases.begin(), bases.end(), b) - bases.begin());
  };

  // Checks one pair; on failure fills the witness.
  auto pair_fails = [&](const Pair& p, Witness& w) {
    const auto& ox = base_orbit(base_index(p.x));
    detail::LazyOrbit oy(family, p.y);
    for (std::int64_t n : detail::search_order(N)) {
      const double d = distance(s, detail::at(ox, n), oy.at(n));
      if (d >= eps) {
        w = {WitnessKind::PairAtTime, {p.x, p.y}, n, d, "pair closer than delta separating to eps"};
        return true;
      }
    }
    return false;
  };

  std::size_t last_failing = 0;
  for (int level = 0; level <= kDyadicLevels; ++level) {
    const double delta = std::ldexp(eps, -level);
    const auto pairs = partner_pairs(s, bases, delta);
    Witness w;
    bool failed = false;
    if (last_failing < pairs.size() && pair_fails(pairs[last_failing], w)) {
      failed = true;
    } else {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i == last_failing) continue;
        if (pair_fails(pairs[i], w)) {
          failed = true;
          last_failing = i;
          break;
        }
      }
    }
    if (!failed) return delta;
    if (blocking) *blocking = w;
  }
  return 0.0;
}

PropertyReport equicontinuity_modulus(const MapFamily& family, double eps, std::int64_t N, std::size_t pair_grid) {
  PropertyReport rep;
  rep.property = Property::Equicontinuity;
  rep.param("eps", format_double(eps));
  rep.param("N", format_int(N));
  rep.param("pair_grid", format_int(static_cast<std::int64_t>(pair_grid)));

  std::vector<double> deltas;
  Witness blocking;
  bool have_blocking = false;
  for (std::int64_t w : {N, 2 * N, 4 * N}) {
    Witness b;
    b.kind = WitnessKind::Static;
    const double d = equicontinuity_delta(family, eps, w, pair_grid, &b);
    deltas.push_back(d);
    if (b.kind == WitnessKind::PairAtTime) {
      blocking = b;
      have_blocking = true;
    }
  }
  rep.detail("delta", format_double(deltas[0]));
  rep.detail("delta_2N", format_double(deltas[1]));
  rep.detail("delta_4N", format_double(deltas[2]));
  const bool stable = deltas[0] > 0.0 && deltas[0] == deltas[1] && deltas[1] == deltas[2];
  rep.verdict = stable ? Verdict::EvidenceFor : Verdict::EvidenceAgainst;
  if (have_blocking) rep.witnesses.push_back(blocking);
  return rep;
}

ProximalExtremes proximal_liminf(const MapFamily& family, double x, double y, std::int64_t N) {
  const SpaceKind s = family.space();
  const auto ox = orbit_window(family, x, N);
  const auto oy = orbit_window(family, y, N);
  ProximalExtremes ext;
  bool first = true;
  for (std::int64_t n : detail::search_order(N)) {
    const double d = distance(s, detail::at(ox, n), detail::at(oy, n));
    if (first || d < ext.min_distance) {
      ext.min_distance = d;
      ext.argmin = n;
    }
    if (first || d > ext.max_distance) {
      ext.max_distance = d;
      ext.argmax = n;
    }
    first = false;
  }
  return ext;
}

PropertyReport li_yorke_classify(const MapFamily& family, double x, double y, std::int64_t N, double low_tol,
                                 double high_tol) {
  PropertyReport rep;
  rep.property = Property::LiYorke;
  rep.param("x", format_double(x));
  rep.param("y", format_double(y));
  rep.param("N", format_int(N));
  rep.param("low_tol", format_double(low_tol));
  rep.param("high_tol", format_double(high_tol));

  const auto ext = proximal_liminf(family, x, y, N);
  rep.detail("min_distance", format_double(ext.min_distance));
  rep.detail("argmin", format_int(ext.argmin));
  rep.detail("max_distance", format_double(ext.max_distance));
  rep.detail("argmax", format_int(ext.argmax));
  rep.witnesses.push_back({WitnessKind::PairAtTime, {x, y}, ext.argmin, ext.min_distance, "closest approach"});
  rep.witnesses.push_back({WitnessKind::PairAtTime, {x, y}, ext.argmax, ext.max_distance, "widest separation"});
  rep.verdict = ext.min_distance < low_tol && ext.max_distance > high_tol ? Verdict::EvidenceFor
                                                                           : Verdict::EvidenceAgainst;
  return rep;
}

PropertyReport sensitivity_at_point(const MapFamily& family, double x, double delta,
                                    const std::vector<double>& radii, std::int64_t N,
                                    const SamplingOptions& opts) {
  if (radii.empty()) throw std::invalid_argument("sensitivity_at_point: radii must be non-empty");
  PropertyReport rep;
  rep.property = Property::Sensitivity;
  rep.param("x", format_double(x));
  rep.param("delta", format_double(delta));
  rep.param("radii", detail::join(radii));
  rep.param("N", format_int(N));
  detail::record_sampling(rep, opts);

  const SpaceKind s = family.space();
  std::vector<std::int64_t> times;
  std::vector<double> failing;
  for (double r : radii) {
    const auto samples = ball_samples(s, x, r, opts);
    std::vector<detail::LazyOrbit> orbits;
    orbits.reserve(samples.size());
    for (double p : samples) orbits.emplace_back(family, p);

    Spread best;
    std::int64_t best_k = 0;
    bool found = false;
    std::vector<double> image(samples.size());
    for (std::int64_t k : detail::search_order(N)) {
      for (std::size_t i = 0; i < samples.size(); ++i) image[i] = orbits[i].at(k);
      const Spread sp = spread(s, image);
      if (sp.diameter > best.diameter) {
        best = sp;
        best_k = k;
      }
      if (sp.diameter > delta) {
        found = true;
        break;
      }
    }
    const Witness w{WitnessKind::PairAtTime, {samples[best.i], samples[best.j]}, best_k, best.diameter,
                    (found ? "expansion beyond delta at r=" : "largest sampled diameter at r=") + format_double(r)};
    rep.witnesses.push_back(w);
    if (found) {
      times.push_back(best_k);
    } else {
      failing.push_back(r);
    }
  }
  rep.detail("witness_times", detail::join(times));
  if (!failing.empty()) rep.detail("unexpanded_radii", detail::join(failing));
  rep.verdict = failing.empty() ? Verdict::EvidenceFor : Verdict::EvidenceAgainst;
  return rep;
}

PropertyReport hull_closure_equality(const MapFamily& family, double x, double eps, std::int64_t N, int order_k,
                                     int depth, const std::vector<double>& extra_points) {
  const PropertyReport eq = equicontinuity_modulus(family, eps, N, 16);
  if (eq.verdict != Verdict::EvidenceFor) {
    throw PreconditionError("hull_closure_equality: family '" + family.name() +
                            "' shows no equicontinuity evidence at eps=" + format_double(eps) + ", N=" +
                            format_int(N));
  }
  PropertyReport rep;
  rep.property = Property::HullClosureEquality;
  rep.param("x", format_double(x));
  rep.param("eps", format_double(eps));
  rep.param("N", format_int(N));
  rep.param("order_k", format_int(order_k));
  rep.param("depth", format_int(depth));
  if (!extra_points.empty()) rep.param("extra_points", detail::join(extra_points));

  const SpaceKind s = family.space();
  PointSet chosen(s, 1e-9);
  std::vector<double> ys;
  for (const auto& [n, y] : orbit_window(family, x, N)) {
    if (chosen.insert(y)) ys.push_back(y);
  }
  for (double y : extra_points) {
    if (chosen.insert(y)) ys.push_back(y);
  }

  const auto hx = hull_sample(family, x, order_k, depth).points;
  double worst = -1.0;
  double worst_y = x;
  std::pair<double, double> worst_pair{x, x};
  for (double y : ys) {
    const auto hy = hull_sample(family, y, order_k, depth).points;
    const double h = hausdorff_distance(s, hx, hy);
    if (h <= worst) continue;
    worst = h;
    worst_y = y;
    // Locate a pair realising the Hausdorff distance.
    PointSet in_x(s, 0.0), in_y(s, 0.0);
    for (double p : hx) in_x.insert(p);
    for (double p : hy) in_y.insert(p);
    double far = -1.0;
    for (double p : hx) {
      const auto [q, d] = in_y.nearest(p);
      if (d > far) {
        far = d;
        worst_pair = {p, q};
      }
    }
    for (double p : hy) {
      const auto [q, d] = in_x.nearest(p);
      if (d > far) {
        far = d;
        worst_pair = {q, p};
      }
    }
  }
  rep.detail("sampled_points", format_int(static_cast<std::int64_t>(ys.size())));
  rep.detail("hausdorff", format_double(worst));
  rep.detail("worst_point", format_double(worst_y));
  rep.detail("equicontinuity_delta", eq.detail_value("delta"));
  rep.witnesses.push_back({WitnessKind::Static, {worst_pair.first, worst_pair.second}, 0,
                           distance(s, worst_pair.first, worst_pair.second),
                           "farthest pair between the two hulls"});
  rep.verdict = worst <= eps ? Verdict::EvidenceFor : Verdict::EvidenceAgainst;
  return rep;
}

PropertyReport dichotomy_scan(const MapFamily& family, double eps, double delta, std::size_t grid, int order_k,
                              int depth, std::int64_t N) {
  require_commutative(family, "dichotomy_scan");
  const SpaceKind s = family.space();
  if (!(delta > 0.0)) delta = diameter(s) / 4.0;
  PropertyReport rep;
  rep.property = Property::Dichotomy;
  rep.param("eps", format_double(eps));
  rep.param("delta", format_double(delta));
  rep.param("grid", format_int(static_cast<std::int64_t>(grid)));
  rep.param("order_k", format_int(order_k));
  rep.param("depth", format_int(depth));
  rep.param("N", format_int(N));

  const std::vector<double> radii{0.1, 0.01};
  const PropertyReport eq = equicontinuity_modulus(family, eps, N);
  std::vector<double> sensitive;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  for (double x : uniform_grid(s, grid)) {
    PropertyReport sr = sensitivity_at_point(family, x, delta, radii, N);
    if (sr.verdict != Verdict::EvidenceFor) continue;
    sensitive.push_back(x);
    rep.witnesses.push_back(sr.witnesses.front());

    // Propagation to nearby orbit points and a few hull points.
    std::vector<double> targets;
    for (std::int64_t n : {1, -1, 2, -2}) targets.push_back(omega(family, n, x));
    const auto hull = hull_sample(family, x, order_k, depth).points;
    for (std::size_t i = 1; i < hull.size() && i <= 8; ++i) targets.push_back(hull[i]);
    for (double t : targets) {
      ++checked;
      const PropertyReport tr = sensitivity_at_point(family, t, delta / 2.0, radii, N);
      if (tr.verdict == Verdict::EvidenceFor) continue;
      ++failures;
      rep.witnesses.push_back(tr.witnesses.back());
    }
  }
  rep.detail("equicontinuity", std::string(to_string(eq.verdict)));
  rep.detail("sensitive_points", detail::join(sensitive));
  rep.detail("propagation_checked", format_int(checked));
  rep.detail("propagation_failures", format_int(failures));

  const bool equi = eq.verdict == Verdict::EvidenceFor;
  std::string branch = "none";
  if (equi && sensitive.empty()) {
    branch = "equicontinuous";
  } else if (!equi && !sensitive.empty() && failures == 0) {
    branch = "sensitive";
  }
  rep.detail("branch", branch);
  rep.verdict = branch == "none" ? Verdict::EvidenceAgainst : Verdict::EvidenceFor;
  return rep;
}

}  // namespace naads
