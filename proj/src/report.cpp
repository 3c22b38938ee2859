#include "naads/report.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "naads/flow.hpp"

namespace naads {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::EvidenceFor: return "EvidenceFor";
    case Verdict::EvidenceAgainst: return "EvidenceAgainst";
    case Verdict::InconclusiveBudget: return "InconclusiveBudget";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Certified, Verdict::Refuted, Verdict::EvidenceFor, Verdict::EvidenceAgainst,
                    Verdict::InconclusiveBudget}) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Periodicity: return "periodicity";
    case Property::AlmostPeriodicity: return "almost_periodicity";
    case Property::UniformAlmostPeriodicity: return "uniform_almost_periodicity";
    case Property::Equicontinuity: return "equicontinuity";
    case Property::LiYorke: return "li_yorke";
    case Property::Sensitivity: return "sensitivity";
    case Property::OrbitDensity: return "orbit_density";
    case Property::Transitivity: return "transitivity";
    case Property::RTransitivity: return "r_transitivity";
    case Property::Minimality: return "minimality";
    case Property::HullPeriodicity: return "hull_periodicity";
    case Property::AlmostPeriodicityPropagation: return "almost_periodicity_propagation";
    case Property::HullClosureEquality: return "hull_closure_equality";
    case Property::Dichotomy: return "dichotomy";
  }
  return "?";
}

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::SelfReturn: return "self_return";
    case WitnessKind::PairAtTime: return "pair_at_time";
    case WitnessKind::Static: return "static";
  }
  return "?";
}

double replay(const MapFamily& family, const Witness& w) {
  const SpaceKind s = family.space();
  switch (w.kind) {
    case WitnessKind::SelfReturn:
      return distance(s, omega(family, w.time, w.points.at(0)), w.points.at(0));
    case WitnessKind::PairAtTime:
      return distance(s, omega(family, w.time, w.points.at(0)), omega(family, w.time, w.points.at(1)));
    case WitnessKind::Static:
      return distance(s, w.points.at(0), w.points.at(1));
  }
  return 0.0;
}

std::string PropertyReport::detail_value(std::string_view key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return v;
  }
  return {};
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

}  // namespace naads
