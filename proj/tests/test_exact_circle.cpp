#include <doctest.h>

#include <cstdlib>
#include <set>

#include "naads/corpus.hpp"
#include "naads/errors.hpp"
#include "naads/exact_circle.hpp"
#include "oracles.hpp"

using namespace naads;
using naads::exact::RationalAngle;

namespace {

const exact::RationalRotationFamily& view(const CorpusEntry& e) { return *e.family.exact_view(); }

bool same(const RationalAngle& a, const oracle::Frac& f) {
  return a == RationalAngle(mpq_class(mpz_class(static_cast<long>(f.p)), mpz_class(static_cast<long>(f.q))));
}

}  // namespace

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(exact::parse_rational("3/8") == mpq_class(3, 8));
  CHECK(exact::parse_rational("-6/8") == mpq_class(-3, 4));
  CHECK(exact::parse_rational("5") == mpq_class(5));
  CHECK(exact::parse_rational("0.125") == mpq_class(1, 8));
  CHECK(exact::parse_rational("-1.5e-3") == mpq_class(-3, 2000));
  CHECK(exact::parse_rational("2.5E1") == mpq_class(25));
  CHECK_THROWS_AS(exact::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(exact::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(exact::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(exact::parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("angles reduce into [0,1) in lowest terms") {
  CHECK(RationalAngle(5, 4).str() == "1/4");
  CHECK(RationalAngle(-1, 4).str() == "3/4");
  CHECK(RationalAngle(4, 4).is_zero());
  CHECK(RationalAngle(6, 8).value() == mpq_class(3, 4));
  CHECK((RationalAngle(3, 4) + RationalAngle(1, 2)).str() == "1/4");
  CHECK((RationalAngle(1, 8) - RationalAngle(1, 4)).str() == "7/8");
  CHECK((-RationalAngle(0, 1)).is_zero());
  CHECK(RationalAngle::from_double(0.375) == RationalAngle(3, 8));
  CHECK(RationalAngle::from_double(-0.25) == RationalAngle(3, 4));
  CHECK(exact::circle_distance(RationalAngle(1, 8), RationalAngle(7, 8)) == mpq_class(1, 4));
  CHECK(exact::circle_distance(RationalAngle(0, 1), RationalAngle(1, 2)) == mpq_class(1, 2));
}

TEST_CASE("angle arithmetic agrees with the integer oracle") {
  oracle::Gen g(7);
  for (int i = 0; i < 500; ++i) {
    const long p1 = static_cast<long>(g.range(-1000, 1000)), p2 = static_cast<long>(g.range(-1000, 1000));
    const long q1 = static_cast<long>(g.range(1, 500)), q2 = static_cast<long>(g.range(1, 500));
    const RationalAngle a(p1, static_cast<unsigned long>(q1)), b(p2, static_cast<unsigned long>(q2));
    const auto fa = oracle::mod1(p1, q1), fb = oracle::mod1(p2, q2);
    CHECK(same(a + b, oracle::add(fa, fb)));
    CHECK(same(a - b, oracle::add(fa, oracle::neg(fb))));
    CHECK(same(-a, oracle::neg(fa)));
    CHECK(a.value() >= 0);
    CHECK(a.value() < 1);
  }
}

TEST_CASE("exact displacements of the corpus rotation families") {
  const auto harmonic = corpus("circle_harmonic");
  const auto ex4 = corpus("circle_ex4");
  const auto settling = corpus("circle_settling");
  for (std::int64_t k = 1; k <= 20; ++k) CHECK(view(harmonic).displacement(2 * k).is_zero());
  CHECK(view(harmonic).displacement(3) == RationalAngle(1, 2));
  CHECK(view(ex4).displacement(2).is_zero());
  CHECK(view(settling).displacement(4) == RationalAngle(3, 8));
  CHECK(view(settling).displacement(0).is_zero());

  for (std::int64_t n = -60; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(same(view(harmonic).displacement(n), oracle::displacement(oracle::harmonic_step, n)));
    CHECK(same(view(ex4).displacement(n), oracle::displacement(oracle::ex4_step, n)));
    CHECK(same(view(settling).displacement(n), oracle::displacement(oracle::settling_step, n)));
  }
}

TEST_CASE("settling displacements follow the closed form") {
  const auto settling = corpus("circle_settling");
  for (std::int64_t k = 1; k <= 30; ++k) {
    const mpq_class tail(mpz_class(1), mpz_class(1) << static_cast<unsigned>(k + 1));
    CHECK(view(settling).displacement(2 * k).value() == mpq_class(1, 2) - tail);
    CHECK(view(settling).displacement(2 * k + 1).value() == mpq_class(1, 2) + tail);
  }
}

TEST_CASE("negative times negate the displacement") {
  for (const char* name : {"circle_harmonic", "circle_ex4", "circle_settling"}) {
    const auto e = corpus(name);
    for (std::int64_t n = 0; n <= 200; ++n) {
      CHECK((view(e).displacement(n) + view(e).displacement(-n)).is_zero());
    }
  }
}

TEST_CASE("exact periodicity certificates and refutations") {
  const auto ex4 = exact::exact_periodicity(view(corpus("circle_ex4")), 2, 50);
  CHECK(ex4.certified);

  const auto settling = exact::exact_periodicity(view(corpus("circle_settling")), 2, 50);
  CHECK_FALSE(settling.certified);
  CHECK(settling.witness_n == 2);
  CHECK(settling.witness_displacement == RationalAngle(1, 4));

  // H_1 = 1 vanishes mod 1, so the first nonzero displacement is at n = 3.
  const auto harmonic = exact::exact_periodicity(view(corpus("circle_harmonic")), 1, 50);
  CHECK_FALSE(harmonic.certified);
  CHECK(harmonic.witness_n == 3);
  CHECK(harmonic.witness_displacement == RationalAngle(1, 2));

  CHECK(exact::exact_periodicity(view(corpus("circle_harmonic")), 2, 50).certified);
}

TEST_CASE("exact hull displacement sets") {
  const auto ex4 = exact::exact_hull_displacements(view(corpus("circle_ex4")), 9, 8);
  const std::set<RationalAngle> got(ex4.angles.begin(), ex4.angles.end());
  for (long j = 0; j < 8; ++j) CHECK(got.count(RationalAngle(j, 8)) == 1);
  CHECK(ex4.stabilized);

  const auto settling = exact::exact_hull_displacements(view(corpus("circle_settling")), 4, 2);
  CHECK(std::binary_search(settling.angles.begin(), settling.angles.end(), RationalAngle(1, 8)));

  const std::vector<RationalAngle> zero_only{RationalAngle()};
  const auto trivial = exact::exact_hull_from_generators(zero_only, 5);
  REQUIRE(trivial.angles.size() == 1);
  CHECK(trivial.angles[0].is_zero());
  CHECK(trivial.stabilized);

  const std::vector<RationalAngle> gens{RationalAngle(1, 1000)};
  const auto capped = exact::exact_hull_from_generators(gens, 900, 50);
  CHECK(capped.budget_exhausted);
  CHECK(capped.angles.size() <= 50);
}

TEST_CASE("exact hulls grow with order and depth") {
  const auto entry = corpus("circle_harmonic");
  const auto& h = view(entry);
  for (int k = 1; k <= 4; ++k) {
    for (int d = 1; d <= 3; ++d) {
      const auto small = exact::exact_hull_displacements(h, k, d).angles;
      const auto big = exact::exact_hull_displacements(h, k + 1, d + 1).angles;
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
  }
}

TEST_CASE("density gap") {
  const std::vector<RationalAngle> single{RationalAngle()};
  CHECK(exact::exact_density_gap(single) == 1);
  const std::vector<RationalAngle> halves{RationalAngle(), RationalAngle(1, 2)};
  CHECK(exact::exact_density_gap(halves) == mpq_class(1, 2));
  std::vector<RationalAngle> eighths;
  for (long j = 0; j < 8; ++j) eighths.emplace_back(j, 8);
  CHECK(exact::exact_density_gap(eighths) == mpq_class(1, 8));
  const std::vector<RationalAngle> uneven{RationalAngle(1, 10), RationalAngle(3, 10)};
  CHECK(exact::exact_density_gap(uneven) == mpq_class(4, 5));
}

TEST_CASE("block rotation family sums consecutive steps") {
  const auto harmonic = corpus("circle_harmonic");
  const auto& h = view(harmonic);
  const auto blocks = exact::block_family(h, 2);
  for (std::int64_t k = 1; k <= 30; ++k) CHECK(blocks.step(k).is_zero());
  const auto settling = corpus("circle_settling");
  const auto& s = view(settling);
  const auto sb = exact::block_family(s, 3);
  for (std::int64_t k = 0; k <= 10; ++k) CHECK(sb.displacement(k) == s.displacement(3 * k));
}

TEST_CASE("denominator budget aborts runaway sums") {
  exact::RationalRotationFamily wild(
      "wild", [](std::int64_t n) { return mpq_class(mpz_class(1), mpz_class(1) << static_cast<unsigned>(n)); }, 64);
  CHECK_NOTHROW(wild.displacement(60));
  CHECK_THROWS_AS(wild.displacement(70), BudgetError);
}

TEST_CASE("float rotation flow tracks the exact displacement") {
  for (const char* name : {"circle_harmonic", "circle_ex4", "circle_settling"}) {
    const auto e = corpus(name);
    const auto& fam = e.family;
    double y = 0.0;
    for (std::int64_t n = 1; n <= 1000; ++n) {
      y = fam.map(n).forward(y);
      CHECK(oracle::circle_dist(y, view(e).displacement(n).to_double()) <= 1e-9);
    }
  }
}
