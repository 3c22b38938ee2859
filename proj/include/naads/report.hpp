#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "naads/family.hpp"

namespace naads {

enum class Verdict { Certified, Refuted, EvidenceFor, EvidenceAgainst, InconclusiveBudget };

enum class Property {
  Periodicity,
  AlmostPeriodicity,
  UniformAlmostPeriodicity,
  Equicontinuity,
  LiYorke,
  Sensitivity,
  OrbitDensity,
  Transitivity,
  RTransitivity,
  Minimality,
  HullPeriodicity,
  AlmostPeriodicityPropagation,
  HullClosureEquality,
  Dichotomy,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Property p);
Verdict parse_verdict(std::string_view text);

/// True for the two verdicts that count as a positive outcome.
inline bool is_positive(Verdict v) { return v == Verdict::Certified || v == Verdict::EvidenceFor; }

/// How a witness distance is recomputed from the family.
enum class WitnessKind {
  SelfReturn,  // d(omega_t(p0), p0)
  PairAtTime,  // d(omega_t(p0), omega_t(p1))
  Static,      // d(p0, p1)
};

std::string_view to_string(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::Static;
  std::vector<double> points;
  std::int64_t time = 0;
  double distance = 0.0;
  std::string note;
};

/// Recomputes a witness distance through the flow.
double replay(const MapFamily& family, const Witness& w);

/// Ordered key/value list; insertion order is the output order.
using Record = std::vector<std::pair<std::string, std::string>>;

struct PropertyReport {
  Property property = Property::Periodicity;
  Verdict verdict = Verdict::InconclusiveBudget;
  std::vector<Witness> witnesses;
  Record parameters;
  Record details;

  void param(std::string key, std::string value) { parameters.emplace_back(std::move(key), std::move(value)); }
  void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  /// Value of a detail key, or empty when absent.
  std::string detail_value(std::string_view key) const;
};

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);
std::string format_int(std::int64_t v);

}  // namespace naads
