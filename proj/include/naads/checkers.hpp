#pragma once

// Finite-window checkers for recurrence, stability, and mixing properties of
// non-autonomous systems.
//
// Infinite-time notions (liminf, syndeticity for every eps, equicontinuity
// for every eps) only ever yield EvidenceFor / EvidenceAgainst. Certified and
// Refuted are reserved for verdicts that are exact: exact rotation
// arithmetic, or a concrete finite counterexample.

#include <cstdint>
#include <vector>

#include "naads/family.hpp"
#include "naads/hull.hpp"
#include "naads/report.hpp"

namespace naads {

/// How ball neighbourhoods are sampled.
struct SamplingOptions {
  /// Random offsets from a seeded generator instead of the van der Corput sequence.
  bool random = false;
  std::uint64_t seed = 0;
  /// Points per ball, including the centre and the two near-boundary points.
  std::size_t samples = 16;
};

/// Points of the open ball B(x, r) intersected with the space.
std::vector<double> ball_samples(SpaceKind space, double x, double r, const SamplingOptions& opts);

PropertyReport periodicity_check(const MapFamily& family, double x, std::int64_t r,
                                 std::int64_t horizon = 25, double tol = 1e-9);

/// Exact periodicity of a rotation family (point-independent).
PropertyReport exact_periodicity_report(const MapFamily& family, std::int64_t r,
                                        std::int64_t horizon = 50);

struct ReturnTimeSet {
  double base = 0.0;
  double eps = 0.0;
  std::int64_t window = 0;
  std::vector<std::int64_t> times;  // ascending, subset of [-window, window]
  std::int64_t max_internal_gap = 0;
  std::int64_t censored_left_gap = 0;
  std::int64_t censored_right_gap = 0;

  std::int64_t censored_gap() const { return censored_left_gap > censored_right_gap ? censored_left_gap : censored_right_gap; }
  std::int64_t worst_gap() const { return censored_gap() > max_internal_gap ? censored_gap() : max_internal_gap; }
};

/// Times n in [-N, N] with d(omega_n(x), x) < eps.
ReturnTimeSet return_time_set(const MapFamily& family, double x, double eps, std::int64_t N);

/// Return-gap bound over windows N, 2N, 4N. Censored gaps that keep growing
/// across the three windows are the signal against almost periodicity.
PropertyReport almost_periodicity_report(const MapFamily& family, double x, double eps,
                                         std::int64_t N = 40);

PropertyReport uniform_ap_report(const MapFamily& family, double eps, std::int64_t N = 40,
                                 std::size_t grid_size = 64);

/// Largest dyadic delta in {eps, eps/2, ..., eps/2^20} such that sampled pairs
/// closer than delta stay eps-close for |n| <= N; repeated at 2N and 4N.
/// A delta that shrinks (or vanishes) as the window grows counts against.
PropertyReport equicontinuity_modulus(const MapFamily& family, double eps, std::int64_t N = 100,
                                      std::size_t pair_grid = 16);

/// Largest dyadic delta for a single window (0 when no level works).
double equicontinuity_delta(const MapFamily& family, double eps, std::int64_t N, std::size_t pair_grid,
                            Witness* blocking = nullptr);

struct ProximalExtremes {
  double min_distance = 0.0;
  std::int64_t argmin = 0;
  double max_distance = 0.0;
  std::int64_t argmax = 0;
};

/// Extremes of d(omega_n x, omega_n y) over |n| <= N. Ties go to the least
/// |n|, positive before negative.
ProximalExtremes proximal_liminf(const MapFamily& family, double x, double y, std::int64_t N);

PropertyReport li_yorke_classify(const MapFamily& family, double x, double y, std::int64_t N = 200,
                                 double low_tol = 1e-3, double high_tol = 0.3);

/// For every radius, looks for |k| <= N with sampled diam(omega_k(B(x, r))) > delta.
PropertyReport sensitivity_at_point(const MapFamily& family, double x, double delta,
                                    const std::vector<double>& radii, std::int64_t N = 200,
                                    const SamplingOptions& opts = {});

/// Whether the orbit window [-N, N] of x comes within eps of every point of
/// a uniform net of spacing eps.
PropertyReport orbit_density(const MapFamily& family, double x, double eps, std::int64_t N = 120);

/// (a) some grid point has an eps-dense orbit window; (b) every ordered pair
/// of eps-balls from the net is connected by some omega_k, |k| <= N.
PropertyReport transitivity_scan(const MapFamily& family, double eps, std::int64_t N = 120,
                                 std::size_t grid = 16, const SamplingOptions& opts = {});

PropertyReport r_transitivity_check(const MapFamily& family, std::int64_t r, double eps = 0.05,
                                    std::int64_t N = 120, std::size_t grid = 16,
                                    const SamplingOptions& opts = {});

/// Smallest k <= order_cap whose truncated hulls from every point of the
/// base grid meet every eps-ball centred on the same grid.
///
/// `grid_spacing` <= 0 selects eps/2; larger than eps/2 is rejected. Exact
/// rotation families yield Certified(k). A hull that stops growing, stays
/// closed under omega_r for |r| <= invariance_horizon, and still misses a
/// ball is a Refuted obstruction.
PropertyReport minimality_certificate(const MapFamily& family, double eps, int order_cap = 9,
                                      int depth = 8, double grid_spacing = 0.0,
                                      std::int64_t invariance_horizon = 64);

/// Requires a commutative family and a periodic base point.
PropertyReport hull_periodicity_property(const MapFamily& family, double x, std::int64_t r,
                                         int order_k = 8, int depth = 6, std::int64_t horizon = 25,
                                         double tol = 1e-9);

/// Requires a commutative family and an almost periodic base point; hull
/// points are tested at 3*eps.
PropertyReport ap_propagation_check(const MapFamily& family, double x, double eps, std::int64_t N = 40,
                                    int order_k = 8, int depth = 6);

/// Hausdorff distance between the hull of x and the hulls of its orbit-window
/// points (plus `extra_points`). Requires equicontinuity evidence at (eps, N).
PropertyReport hull_closure_equality(const MapFamily& family, double x, double eps = 0.1,
                                     std::int64_t N = 20, int order_k = 9, int depth = 8,
                                     const std::vector<double>& extra_points = {});

/// Equicontinuity evidence, the grid points with sensitivity evidence, and a
/// check that sensitivity carries over to orbit and hull points of each.
/// `delta` <= 0 selects diam(X)/4.
PropertyReport dichotomy_scan(const MapFamily& family, double eps = 0.1, double delta = 0.0,
                              std::size_t grid = 16, int order_k = 4, int depth = 3,
                              std::int64_t N = 100);

/// Throws PreconditionError unless the family is declared commutative and
/// passes the sampled audit.
void require_commutative(const MapFamily& family, std::string_view checker);

}  // namespace naads
