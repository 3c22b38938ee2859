#include "naads/homeomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "naads/errors.hpp"

namespace naads {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Linear interpolation along increasing knots; a query equal to a knot
// returns that knot's value exactly (left piece convention).
double interpolate(const std::vector<std::pair<double, double>>& bp, double x, bool by_second) {
  auto key = [by_second](const std::pair<double, double>& p) { return by_second ? p.second : p.first; };
  auto val = [by_second](const std::pair<double, double>& p) { return by_second ? p.first : p.second; };
  auto it = std::lower_bound(bp.begin(), bp.end(), x,
                             [&](const std::pair<double, double>& p, double q) { return key(p) < q; });
  if (it == bp.begin()) return val(*it);
  if (it == bp.end()) return val(bp.back());
  if (key(*it) == x) return val(*it);
  const auto& lo = *(it - 1);
  const auto& hi = *it;
  const double t = (x - key(lo)) / (key(hi) - key(lo));
  return std::clamp(val(lo) + t * (val(hi) - val(lo)), val(lo), val(hi));
}

}  // namespace

std::string Ratio::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Homeomorphism Homeomorphism::piecewise_linear(std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.size() < 2) throw ConstructionError("piecewise-linear map needs >= 2 breakpoints");
  if (breakpoints.front() != std::pair{0.0, 0.0} || breakpoints.back() != std::pair{1.0, 1.0}) {
    throw ConstructionError("piecewise-linear map must run from (0,0) to (1,1)");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const auto& [x0, y0] = breakpoints[i - 1];
    const auto& [x1, y1] = breakpoints[i];
    if (!std::isfinite(x1) || !std::isfinite(y1) || !(x1 > x0) || !(y1 > y0)) {
      throw ConstructionError("piecewise-linear breakpoints must be strictly increasing in x and f(x)");
    }
  }
  return Homeomorphism(PiecewiseLinear{std::move(breakpoints)}, SpaceKind::UnitInterval);
}

Homeomorphism Homeomorphism::power(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw ConstructionError("power-map exponent must be positive");
  const std::int64_t g = std::gcd(num, den);
  return Homeomorphism(PowerMap{Ratio{num / g, den / g}}, SpaceKind::UnitInterval);
}

Homeomorphism Homeomorphism::rotation(double turns) {
  if (!std::isfinite(turns)) throw ConstructionError("rotation angle must be finite");
  return Homeomorphism(CircleRotation{normalize(SpaceKind::Circle, turns), std::nullopt},
                       SpaceKind::Circle);
}

Homeomorphism Homeomorphism::rotation(const exact::RationalAngle& angle) {
  return Homeomorphism(CircleRotation{angle.to_double(), angle}, SpaceKind::Circle);
}

Homeomorphism Homeomorphism::reflection(SpaceKind space) { return Homeomorphism(Reflection{}, space); }

Homeomorphism Homeomorphism::identity(SpaceKind space) {
  if (space == SpaceKind::Circle) return rotation(exact::RationalAngle{});
  return piecewise_linear({{0.0, 0.0}, {1.0, 1.0}});
}

Homeomorphism Homeomorphism::composite(std::vector<Homeomorphism> parts) {
  if (parts.empty()) throw ConstructionError("composite of no maps");
  std::vector<Homeomorphism> flat;
  for (auto& p : parts) {
    if (auto* c = std::get_if<Composite>(&p.v_)) {
      for (auto& q : c->parts) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  const SpaceKind space = flat.front().space();
  for (const auto& p : flat) {
    if (p.space() != space) throw ConstructionError("composite mixes interval and circle maps");
  }
  if (std::all_of(flat.begin(), flat.end(), [](const Homeomorphism& h) { return h.exact_rotation().has_value(); })) {
    exact::RationalAngle sum;
    for (const auto& p : flat) sum = sum + *p.exact_rotation();
    return rotation(sum);
  }
  if (flat.size() == 1) return flat.front();
  return Homeomorphism(Composite{std::move(flat)}, space);
}

std::optional<exact::RationalAngle> Homeomorphism::exact_rotation() const {
  if (const auto* r = std::get_if<CircleRotation>(&v_)) return r->exact;
  return std::nullopt;
}

double Homeomorphism::forward(double x) const {
  if (!contains(space_, x)) {
    throw DomainError("point " + fmt_double(x) + " outside " + std::string(to_string(space_)));
  }
  return apply(x, Direction::Forward);
}

double Homeomorphism::inverse(double x) const {
  if (!contains(space_, x)) {
    throw DomainError("point " + fmt_double(x) + " outside " + std::string(to_string(space_)));
  }
  return apply(x, Direction::Inverse);
}

double Homeomorphism::apply(double x, Direction dir) const {
  const bool fwd = dir == Direction::Forward;
  return std::visit(
      overloaded{
          [&](const PiecewiseLinear& pl) { return interpolate(pl.breakpoints, x, !fwd); },
          [&](const PowerMap& pm) {
            if (x == 0.0 || x == 1.0) return x;
            const double e = fwd ? pm.exponent.value()
                                 : static_cast<double>(pm.exponent.den) / static_cast<double>(pm.exponent.num);
            return std::clamp(std::pow(x, e), 0.0, 1.0);
          },
          [&](const CircleRotation& rot) {
            return normalize(SpaceKind::Circle, fwd ? x + rot.turns : x - rot.turns);
          },
          [&](const Reflection&) { return normalize(space_, 1.0 - x); },
          [&](const Composite& c) {
            double y = x;
            if (fwd) {
              for (const auto& p : c.parts) y = p.apply(y, dir);
            } else {
              for (auto it = c.parts.rbegin(); it != c.parts.rend(); ++it) y = it->apply(y, dir);
            }
            return y;
          },
      },
      v_);
}

std::string Homeomorphism::describe() const {
  return std::visit(
      overloaded{
          [](const PiecewiseLinear& pl) {
            std::string s = "pl[";
            for (std::size_t i = 0; i < pl.breakpoints.size(); ++i) {
              if (i) s += ",";
              s += "(" + fmt_double(pl.breakpoints[i].first) + "," + fmt_double(pl.breakpoints[i].second) + ")";
            }
            return s + "]";
          },
          [](const PowerMap& pm) { return "pow(" + pm.exponent.str() + ")"; },
          [](const CircleRotation& rot) {
            return "rot(" + (rot.exact ? rot.exact->str() : fmt_double(rot.turns)) + ")";
          },
          [](const Reflection&) { return std::string("refl"); },
          [](const Composite& c) {
            std::string s = "comp[";
            for (std::size_t i = 0; i < c.parts.size(); ++i) {
              if (i) s += ",";
              s += c.parts[i].describe();
            }
            return s + "]";
          },
      },
      v_);
}

}  // namespace naads
