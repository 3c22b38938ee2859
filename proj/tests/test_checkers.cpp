#include <doctest.h>

#include <cmath>
#include <set>

#include "naads/checkers.hpp"
#include "naads/corpus.hpp"
#include "naads/errors.hpp"
#include "naads/flow.hpp"
#include "oracles.hpp"

using namespace naads;

namespace {

MapFamily fam(const char* name) { return corpus(name).family; }

double num(const PropertyReport& r, const char* key) { return std::stod(r.detail_value(key)); }

}  // namespace

TEST_CASE("periodicity examples") {
  const auto half = periodicity_check(fam("example1_tent_sqrt"), 0.5, 2, 25);
  CHECK(half.verdict == Verdict::EvidenceFor);
  CHECK(num(half, "max_deviation") <= 1e-12);

  const auto quarter = periodicity_check(fam("example1_tent_sqrt"), 0.25, 2, 5);
  CHECK(quarter.verdict == Verdict::Refuted);
  REQUIRE(quarter.witnesses.size() == 1);
  CHECK(quarter.witnesses[0].time == 2);
  const double image = omega(fam("example1_tent_sqrt"), 2, 0.25);
  CHECK(std::fabs(image - (1.0 - std::sqrt(1.0 / 8.0))) <= 1e-12);
  CHECK(image == doctest::Approx(0.6464).epsilon(1e-4));

  CHECK(periodicity_check(fam("example2_powers"), 0.3, 2, 10).verdict == Verdict::EvidenceFor);
  CHECK(periodicity_check(fam("interval_square_sqrt"), 0.0, 1, 10).verdict == Verdict::EvidenceFor);
  CHECK(periodicity_check(fam("circle_ex4"), 0.3, 2, 25).verdict == Verdict::Certified);
  const auto settling = periodicity_check(fam("circle_settling"), 0.1, 2, 10);
  CHECK(settling.verdict == Verdict::Refuted);
  CHECK(settling.witnesses.at(0).time == 2);
}

TEST_CASE("exact periodicity report needs an exact view") {
  CHECK(exact_periodicity_report(fam("circle_ex4"), 2).verdict == Verdict::Certified);
  const auto h = exact_periodicity_report(fam("circle_harmonic"), 1);
  CHECK(h.verdict == Verdict::Refuted);
  CHECK(h.detail_value("witness_n") == "3");
  CHECK(h.detail_value("exact_displacement") == "1/2");
  CHECK_THROWS_AS(exact_periodicity_report(fam("example2_powers"), 2), PreconditionError);
}

TEST_CASE("return time sets") {
  const auto settling = return_time_set(fam("circle_settling"), 0.0, 0.3, 20);
  CHECK(settling.times == std::vector<std::int64_t>{-3, -2, 0, 2, 3});
  CHECK(settling.censored_right_gap == 17);
  CHECK(settling.censored_left_gap == 17);
  CHECK(settling.max_internal_gap == 2);

  const auto harmonic = return_time_set(fam("circle_harmonic"), 0.4, 0.1, 20);
  for (std::int64_t n = -20; n <= 20; n += 2) {
    CHECK(std::find(harmonic.times.begin(), harmonic.times.end(), n) != harmonic.times.end());
  }
  CHECK(harmonic.max_internal_gap == 2);

  const auto id = return_time_set(fam("identity"), 0.7, 0.01, 5);
  CHECK(id.times.size() == 11);
  CHECK(id.max_internal_gap == 1);
  CHECK(id.censored_gap() == 0);
}

TEST_CASE("return times re-check against the flow") {
  oracle::Gen g(11);
  for (const auto& listing : list_corpus()) {
    const auto f = fam(listing.name.c_str());
    for (int trial = 0; trial < 5; ++trial) {
      const double x = f.space() == SpaceKind::Circle ? g.unit() : g.unit();
      const double eps = 0.02 + 0.3 * g.unit();
      const auto set = return_time_set(f, x, eps, 15);
      const std::set<std::int64_t> times(set.times.begin(), set.times.end());
      for (std::int64_t n = -15; n <= 15; ++n) {
        CHECK((distance(f.space(), omega(f, n, x), x) < eps) == (times.count(n) == 1));
      }
      std::int64_t gap = 0;
      for (std::size_t i = 1; i < set.times.size(); ++i) gap = std::max(gap, set.times[i] - set.times[i - 1]);
      CHECK(gap == set.max_internal_gap);
      CHECK(set.censored_left_gap == set.times.front() + 15);
      CHECK(set.censored_right_gap == 15 - set.times.back());
    }
  }
}

TEST_CASE("almost periodicity") {
  const auto settling = almost_periodicity_report(fam("circle_settling"), 0.0, 0.3, 20);
  CHECK(settling.verdict == Verdict::EvidenceAgainst);
  CHECK(settling.detail_value("censored_gap_trend") == "17,37,77");

  const auto harmonic = almost_periodicity_report(fam("circle_harmonic"), 0.2, 0.05, 40);
  CHECK(harmonic.verdict == Verdict::EvidenceFor);
  CHECK(harmonic.detail_value("M") == "2");

  for (double x : {0.0, 0.3, 0.77}) {
    for (double eps : {0.01, 0.2}) {
      const auto r = almost_periodicity_report(fam("circle_ex4"), x, eps, 40);
      CHECK(r.verdict == Verdict::EvidenceFor);
      CHECK(r.detail_value("M") == "2");
    }
  }
}

TEST_CASE("uniform almost periodicity") {
  const auto h = uniform_ap_report(fam("circle_harmonic"), 0.1, 40, 64);
  CHECK(h.verdict == Verdict::EvidenceFor);
  CHECK(h.detail_value("M") == "2");
  CHECK(uniform_ap_report(fam("circle_settling"), 0.3, 40, 64).verdict == Verdict::EvidenceAgainst);
  const auto id = uniform_ap_report(fam("identity"), 0.1, 40, 16);
  CHECK(id.verdict == Verdict::EvidenceFor);
  CHECK(id.detail_value("M") == "1");
}

TEST_CASE("equicontinuity modulus") {
  for (const char* name : {"circle_harmonic", "circle_ex4", "circle_settling"}) {
    const auto r = equicontinuity_modulus(fam(name), 0.1, 50);
    CHECK(r.verdict == Verdict::EvidenceFor);
    CHECK(num(r, "delta") == 0.1);
  }
  const auto powers = equicontinuity_modulus(fam("example2_powers"), 0.25, 25);
  CHECK(powers.verdict == Verdict::EvidenceAgainst);
  CHECK(num(powers, "delta_4N") < 1e-3);

  const auto sq = equicontinuity_modulus(fam("interval_square_sqrt"), 0.1, 100);
  CHECK(sq.verdict == Verdict::EvidenceFor);
  CHECK(num(sq, "delta") <= 0.01);
  CHECK(num(sq, "delta") > 0.005);
  CHECK(num(sq, "delta") == num(sq, "delta_4N"));
}

TEST_CASE("equicontinuity blocking witness separates a close pair") {
  Witness w;
  const double d = equicontinuity_delta(fam("example2_powers"), 0.25, 50, 16, &w);
  CHECK(d < 1e-3);
  REQUIRE(w.kind == WitnessKind::PairAtTime);
  CHECK(w.distance >= 0.25);
  CHECK(std::fabs(replay(fam("example2_powers"), w) - w.distance) <= 1e-12);
}

TEST_CASE("proximal extremes") {
  const auto p = proximal_liminf(fam("example2_powers"), 0.2, 0.8, 100);
  CHECK(p.min_distance < 1e-3);
  CHECK(p.max_distance >= 0.59);

  const auto same = proximal_liminf(fam("example2_powers"), 0.4, 0.4, 100);
  CHECK(same.min_distance == 0.0);
  CHECK(same.max_distance == 0.0);
  CHECK(same.argmin == 0);
  CHECK(same.argmax == 0);

  const auto rot = proximal_liminf(fam("circle_harmonic"), 0.1, 0.3, 100);
  CHECK(rot.min_distance == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(rot.max_distance == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("li-yorke classification") {
  CHECK(li_yorke_classify(fam("example2_powers"), 0.2, 0.8, 100).verdict == Verdict::EvidenceFor);
  CHECK(li_yorke_classify(fam("example2_powers"), 0.6, 0.6).verdict == Verdict::EvidenceAgainst);
  CHECK(li_yorke_classify(fam("circle_ex4"), 0.1, 0.4).verdict == Verdict::EvidenceAgainst);
}

TEST_CASE("sensitivity") {
  const std::vector<double> radii{0.1, 0.01};
  const auto at_one = sensitivity_at_point(fam("example2_powers"), 1.0, 0.5, radii, 200);
  CHECK(at_one.verdict == Verdict::EvidenceFor);
  CHECK(at_one.witnesses.size() == 2);
  for (double x : {0.0, 0.3, 0.9}) {
    CHECK(sensitivity_at_point(fam("circle_harmonic"), x, 0.125, radii, 200).verdict == Verdict::EvidenceAgainst);
  }
  CHECK(sensitivity_at_point(fam("interval_square_sqrt"), 0.0, 0.5, radii, 50).verdict ==
        Verdict::EvidenceAgainst);
}

TEST_CASE("ball samples") {
  SamplingOptions opts;
  const auto b = ball_samples(SpaceKind::UnitInterval, 0.5, 0.1, opts);
  CHECK(b.size() == 16);
  for (double p : b) CHECK(std::fabs(p - 0.5) < 0.1);
  const auto edge = ball_samples(SpaceKind::UnitInterval, 0.0, 0.1, opts);
  for (double p : edge) CHECK((p >= 0.0 && p < 0.1));
  const auto wrap = ball_samples(SpaceKind::Circle, 0.02, 0.1, opts);
  for (double p : wrap) {
    CHECK(p >= 0.0);
    CHECK(p < 1.0);
    CHECK(oracle::circle_dist(p, 0.02) < 0.1);
  }
  SamplingOptions rnd;
  rnd.random = true;
  rnd.seed = 5;
  CHECK(ball_samples(SpaceKind::Circle, 0.3, 0.1, rnd) == ball_samples(SpaceKind::Circle, 0.3, 0.1, rnd));
  rnd.seed = 6;
  CHECK(ball_samples(SpaceKind::Circle, 0.3, 0.1, rnd) != ball_samples(SpaceKind::Circle, 0.3, 0.1, opts));
}

TEST_CASE("orbit density") {
  CHECK(orbit_density(fam("circle_harmonic"), 0.0, 0.05, 120).verdict == Verdict::EvidenceFor);
  CHECK(orbit_density(fam("circle_ex4"), 0.1, 1.0 / 16.0, 120).verdict == Verdict::EvidenceAgainst);
  CHECK(orbit_density(fam("circle_ex4"), 0.1, 1.0 / 16.0, 400).verdict == Verdict::EvidenceAgainst);
  CHECK(orbit_density(fam("identity"), 0.5, 0.4, 10).verdict == Verdict::EvidenceAgainst);
}

TEST_CASE("transitivity") {
  const auto h = transitivity_scan(fam("circle_harmonic"), 0.05, 120);
  CHECK(h.verdict == Verdict::EvidenceFor);
  CHECK(h.detail_value("subverdicts_agree") == "yes");
  const auto e = transitivity_scan(fam("circle_ex4"), 1.0 / 16.0, 120);
  CHECK(e.verdict == Verdict::EvidenceAgainst);
  CHECK(e.detail_value("subverdicts_agree") == "yes");
  CHECK(transitivity_scan(fam("identity"), 0.1, 20).verdict == Verdict::EvidenceAgainst);
}

TEST_CASE("r-transitivity") {
  const auto two = r_transitivity_check(fam("circle_harmonic"), 2);
  CHECK(two.verdict == Verdict::EvidenceAgainst);
  CHECK(two.detail_value("identity_blocks_exact") == "yes");
  CHECK(r_transitivity_check(fam("circle_harmonic"), 1).verdict == Verdict::EvidenceFor);
  for (std::int64_t r : {1, 2, 3}) {
    CHECK(r_transitivity_check(fam("identity"), r, 0.1, 20).verdict == Verdict::EvidenceAgainst);
  }
}

TEST_CASE("minimality certificates") {
  const auto ex4 = minimality_certificate(fam("circle_ex4"), 1.0 / 8.0, 9, 8);
  CHECK(ex4.verdict == Verdict::Certified);
  CHECK(ex4.detail_value("k") == "9");
  CHECK(ex4.detail_value("density_gap") == "1/8");

  // One order lower the hull is the quarter grid, and some ball is missed.
  CHECK(minimality_certificate(fam("circle_ex4"), 1.0 / 8.0, 8, 8).verdict != Verdict::Certified);

  const auto settling = minimality_certificate(fam("circle_settling"), 1.0 / 8.0, 6, 8);
  CHECK(settling.verdict == Verdict::Certified);

  const auto sq = minimality_certificate(fam("interval_square_sqrt"), 0.1);
  CHECK(sq.verdict == Verdict::Refuted);
  CHECK(sq.detail_value("witness_x") == "0");

  CHECK(minimality_certificate(fam("identity"), 0.1).verdict == Verdict::Refuted);
  CHECK_THROWS_AS(minimality_certificate(fam("circle_ex4"), 0.1, 9, 8, 0.2), std::invalid_argument);
}

TEST_CASE("certified minimality re-verifies by direct enumeration") {
  const auto f = fam("circle_ex4");
  const double eps = 1.0 / 8.0;
  const auto rep = minimality_certificate(f, eps, 9, 8);
  REQUIRE(rep.verdict == Verdict::Certified);
  const int k = std::stoi(rep.detail_value("k"));
  std::vector<double> grid;
  for (int j = 0; j < 16; ++j) grid.push_back(j / 16.0);
  for (double x : grid) {
    const auto hull = hull_sample(f, x, k, 8).points;
    for (double c : grid) {
      double best = 1.0;
      for (double p : hull) best = std::min(best, oracle::circle_dist(p, c));
      CHECK(best < eps);
    }
  }
}

TEST_CASE("hull periodicity") {
  CHECK(hull_periodicity_property(fam("circle_ex4"), 0.3, 2, 8, 6).verdict == Verdict::EvidenceFor);
  const auto h = hull_periodicity_property(fam("circle_harmonic"), 0.5, 2, 6, 4);
  CHECK(h.verdict == Verdict::EvidenceFor);
  CHECK(h.detail_value("failing_points") == "0");
  CHECK_THROWS_AS(hull_periodicity_property(fam("example1_tent_sqrt"), 0.5, 2), PreconditionError);
  CHECK_THROWS_AS(hull_periodicity_property(fam("circle_settling"), 0.1, 2), PreconditionError);
}

TEST_CASE("almost periodicity propagation") {
  const auto h = ap_propagation_check(fam("circle_harmonic"), 0.0, 0.05);
  CHECK(h.verdict == Verdict::EvidenceFor);
  CHECK(h.detail_value("M") == "2");
  const auto e = ap_propagation_check(fam("circle_ex4"), 0.7, 0.1);
  CHECK(e.verdict == Verdict::EvidenceFor);
  CHECK(e.detail_value("M") == "2");
  CHECK_THROWS_AS(ap_propagation_check(fam("circle_settling"), 0.0, 0.3, 20), PreconditionError);
  CHECK_THROWS_AS(ap_propagation_check(fam("example1_tent_sqrt"), 0.5, 0.1), PreconditionError);
}

TEST_CASE("hull closure equality") {
  CHECK(hull_closure_equality(fam("circle_ex4"), 0.2).verdict == Verdict::EvidenceFor);
  CHECK(hull_closure_equality(fam("circle_harmonic"), 0.9).verdict == Verdict::EvidenceFor);
  const auto split = hull_closure_equality(fam("interval_square_sqrt"), 0.5, 0.1, 20, 9, 8, {0.0});
  CHECK(split.verdict == Verdict::EvidenceAgainst);
  CHECK(num(split, "hausdorff") > 0.9);
  CHECK(split.detail_value("worst_point") == "0");
  CHECK_THROWS_AS(hull_closure_equality(fam("example2_powers"), 0.5), PreconditionError);
}

TEST_CASE("dichotomy scan") {
  for (const char* name : {"circle_harmonic", "circle_ex4", "identity"}) {
    const auto r = dichotomy_scan(fam(name), 0.1, 0.0, 8, 3, 2, 40);
    CHECK(r.verdict == Verdict::EvidenceFor);
    CHECK(r.detail_value("equicontinuity") == "EvidenceFor");
    CHECK(r.detail_value("sensitive_points").empty());
  }
  const auto p = dichotomy_scan(fam("example2_powers"), 0.1, 0.0, 16, 4, 3, 100);
  CHECK(p.detail_value("equicontinuity") == "EvidenceAgainst");
  CHECK_FALSE(p.detail_value("sensitive_points").empty());
  CHECK(p.detail_value("propagation_failures") == "0");
  CHECK(p.verdict == Verdict::EvidenceFor);
  CHECK_THROWS_AS(dichotomy_scan(fam("example1_tent_sqrt")), PreconditionError);
}
