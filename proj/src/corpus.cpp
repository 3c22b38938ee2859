#include "naads/corpus.hpp"

#include <functional>

#include "naads/errors.hpp"

namespace naads {
namespace {

using exact::RationalRotationFamily;

// 1/2^k as an exact rational.
mpq_class dyadic(std::int64_t k) {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return mpq_class(mpz_class(1), den);
}

mpq_class harmonic(std::int64_t k) {
  mpq_class h = 0;
  for (std::int64_t i = 1; i <= k; ++i) h += mpq_class(1, static_cast<unsigned long>(i));
  h.canonicalize();
  return h;
}

MapFamily alternating(std::string name, std::function<Homeomorphism(std::int64_t)> odd,
                      std::function<Homeomorphism(std::int64_t)> even, FamilyTraits traits) {
  auto rule = [odd = std::move(odd), even = std::move(even)](std::int64_t n) {
    return n % 2 == 1 ? odd((n + 1) / 2) : even(n / 2);
  };
  return MapFamily(std::move(name), SpaceKind::UnitInterval, rule, traits);
}

Expectation expect(std::string key, std::string task, Record params, Verdict v, std::string locus) {
  return {std::move(key), std::move(task), std::move(params), v, std::move(locus)};
}

CorpusEntry example1_tent_sqrt() {
  const auto tent = Homeomorphism::piecewise_linear({{0.0, 0.0}, {0.5, 0.25}, {1.0, 1.0}});
  const auto root_flip = Homeomorphism::composite(
      {Homeomorphism::power(1, 2), Homeomorphism::reflection(SpaceKind::UnitInterval)});
  CorpusEntry e{"example1_tent_sqrt",
                "Tent and root flip: a broken-line map alternating with one minus the square root; the maps do not commute",
                alternating("example1_tent_sqrt", [tent](std::int64_t) { return tent; },
                            [root_flip](std::int64_t) { return root_flip; }, {false, false}),
                {}};
  e.expected = {
      expect("periodic_half", "periodicity_check", {{"x", "1/2"}, {"r", "2"}, {"horizon", "25"}},
             Verdict::EvidenceFor, "Tent and root flip: the midpoint returns after two steps"),
      expect("image_not_periodic", "periodicity_check", {{"x", "1/4"}, {"r", "2"}, {"horizon", "25"}},
             Verdict::Refuted, "Tent and root flip: the image of the midpoint under the first map does not return"),
  };
  return e;
}

CorpusEntry example2_powers() {
  CorpusEntry e{"example2_powers",
                "Powers and roots: even powers alternating with the matching roots; every interior pair is Li-Yorke",
                alternating(
                    "example2_powers", [](std::int64_t k) { return Homeomorphism::power(2 * k, 1); },
                    [](std::int64_t k) { return Homeomorphism::power(1, 2 * k); }, {true, false}),
                {}};
  e.expected = {
      expect("li_yorke_dense", "li_yorke_classify", {{"x", "0.2"}, {"y", "0.8"}, {"N", "100"}},
             Verdict::EvidenceFor, "Powers and roots: interior pairs are proximal yet separate again"),
      expect("sensitive_at_one", "sensitivity_at_point",
             {{"x", "1"}, {"delta", "0.5"}, {"radii", "0.1,0.01"}, {"N", "200"}}, Verdict::EvidenceFor,
             "Powers and roots: neighbourhoods of the fixed point 1 are stretched across the interval"),
  };
  return e;
}

CorpusEntry circle_settling() {
  RationalRotationFamily ex("circle_settling", [](std::int64_t n) -> mpq_class {
    if (n == 1) return mpq_class(1, 2);
    if (n == 2) return mpq_class(-1, 4);
    if (n % 2 == 1) return dyadic((n - 1) / 2);
    const std::int64_t k = n / 2;
    return -(dyadic(k) + dyadic(k + 1));
  });
  CorpusEntry e{"circle_settling",
                "Settling rotations: signed dyadic kicks whose running total settles at half a turn",
                rotation_family("circle_settling", std::move(ex)), {}};
  e.expected = {
      expect("almost_periodic_points", "almost_periodicity_report", {{"x", "0"}, {"eps", "0.3"}, {"N", "20"}},
             Verdict::EvidenceAgainst, "Settling rotations: no point is almost periodic"),
      expect("minimal", "minimality_certificate", {{"eps", "1/8"}, {"order_cap", "6"}, {"depth", "8"}},
             Verdict::Certified, "Settling rotations: the system is minimal"),
  };
  return e;
}

CorpusEntry circle_ex4() {
  RationalRotationFamily ex("circle_ex4", [](std::int64_t n) -> mpq_class {
    const std::int64_t k = (n + 3) / 4;
    const std::int64_t m = n % 4;
    return (m == 0 || m == 1) ? dyadic(k) : mpq_class(-dyadic(k));
  });
  CorpusEntry e{"circle_ex4",
                "Paired dyadic rotations: every point has period two and the system is minimal, not transitive",
                rotation_family("circle_ex4", std::move(ex)), {}};
  e.expected = {
      expect("minimal", "minimality_certificate", {{"eps", "1/8"}, {"order_cap", "9"}, {"depth", "8"}},
             Verdict::Certified, "Paired dyadic rotations: minimal with periodic points"),
      expect("period_two", "exact_periodicity", {{"r", "2"}, {"horizon", "50"}}, Verdict::Certified,
             "Paired dyadic rotations: every point has period two"),
      expect("not_transitive", "transitivity_scan", {{"eps", "1/16"}}, Verdict::EvidenceAgainst,
             "Paired dyadic rotations: a minimal system that is not transitive"),
  };
  return e;
}

CorpusEntry circle_harmonic() {
  RationalRotationFamily ex("circle_harmonic", [](std::int64_t n) -> mpq_class {
    const mpq_class h = harmonic((n + 1) / 2);
    return n % 2 == 1 ? h : mpq_class(-h);
  });
  CorpusEntry e{"circle_harmonic",
                "Harmonic rotations: forward and back by partial harmonic sums; transitive, periodic, not sensitive",
                rotation_family("circle_harmonic", std::move(ex)), {}};
  e.expected = {
      expect("sensitive", "sensitivity_at_point",
             {{"x", "0"}, {"delta", "0.125"}, {"radii", "0.1,0.01"}, {"N", "200"}}, Verdict::EvidenceAgainst,
             "Harmonic rotations: transitive with dense periodic points, yet not sensitive"),
      expect("dense_orbit", "orbit_density", {{"x", "0"}, {"eps", "0.05"}, {"N", "120"}}, Verdict::EvidenceFor,
             "Harmonic rotations: orbits come arbitrarily close to every point"),
      expect("transitive", "transitivity_scan", {{"eps", "0.05"}, {"N", "120"}}, Verdict::EvidenceFor,
             "Harmonic rotations: the system is transitive"),
      expect("not_2_transitive", "r_transitivity_check", {{"r", "2"}}, Verdict::EvidenceAgainst,
             "Harmonic rotations: consecutive pairs cancel, so the two-step system is trivial"),
  };
  return e;
}

CorpusEntry interval_square_sqrt() {
  CorpusEntry e{"interval_square_sqrt",
                "Square alternating with square root: 0 is fixed, so hull closures of different points differ",
                alternating(
                    "interval_square_sqrt", [](std::int64_t) { return Homeomorphism::power(2, 1); },
                    [](std::int64_t) { return Homeomorphism::power(1, 2); }, {true, false}),
                {}};
  e.expected = {
      expect("not_minimal", "minimality_certificate", {{"eps", "0.1"}}, Verdict::Refuted,
             "Square and root: the fixed point 0 has a closed hull missing most of the interval"),
      expect("hull_closure_split", "hull_closure_equality", {{"x", "0.5"}, {"extra_points", "0"}},
             Verdict::EvidenceAgainst, "Square and root: the hull of a limit point can be much smaller"),
  };
  return e;
}

CorpusEntry identity_family() {
  CorpusEntry e{"identity", "Identity maps on the interval; the trivial reference system",
                MapFamily("identity", SpaceKind::UnitInterval,
                          [](std::int64_t) { return Homeomorphism::identity(SpaceKind::UnitInterval); },
                          {true, true}),
                {}};
  e.expected = {
      expect("not_dense", "orbit_density", {{"x", "0.5"}, {"eps", "0.25"}}, Verdict::EvidenceAgainst,
             "Identity: every orbit is a single point"),
      expect("equicontinuous", "equicontinuity_modulus", {{"eps", "0.1"}}, Verdict::EvidenceFor,
             "Identity: trivially equicontinuous"),
  };
  return e;
}

using Builder = CorpusEntry (*)();

const std::vector<std::pair<std::string_view, Builder>>& builders() {
  static const std::vector<std::pair<std::string_view, Builder>> table{
      {"example1_tent_sqrt", example1_tent_sqrt},     {"example2_powers", example2_powers},
      {"circle_settling", circle_settling},           {"circle_ex4", circle_ex4},
      {"circle_harmonic", circle_harmonic},           {"interval_square_sqrt", interval_square_sqrt},
      {"identity", identity_family},
  };
  return table;
}

}  // namespace

const Expectation& CorpusEntry::expectation(std::string_view key) const {
  for (const auto& e : expected) {
    if (e.key == key) return e;
  }
  throw LookupError("corpus entry '" + name + "' has no expectation '" + std::string(key) + "'");
}

CorpusEntry corpus(std::string_view name) {
  for (const auto& [n, build] : builders()) {
    if (n == name) return build();
  }
  throw LookupError("unknown corpus family '" + std::string(name) + "'");
}

std::vector<CorpusListing> list_corpus() {
  std::vector<CorpusListing> out;
  for (const auto& [n, build] : builders()) {
    const CorpusEntry e = build();
    out.push_back({e.name, e.locus});
  }
  return out;
}

}  // namespace naads
