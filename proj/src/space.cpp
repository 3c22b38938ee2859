#include "naads/space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "naads/errors.hpp"

namespace naads {

std::string_view to_string(SpaceKind kind) {
  return kind == SpaceKind::Circle ? "circle" : "interval";
}

SpaceKind parse_space(std::string_view text) {
  if (text == "circle") return SpaceKind::Circle;
  if (text == "interval") return SpaceKind::UnitInterval;
  throw std::invalid_argument("unknown space '" + std::string(text) + "'");
}

double distance(SpaceKind kind, double x, double y) {
  const double d = std::fabs(x - y);
  if (kind == SpaceKind::Circle) return std::fmin(d, 1.0 - d);
  return d;
}

double diameter(SpaceKind kind) { return kind == SpaceKind::Circle ? 0.5 : 1.0; }

bool contains(SpaceKind kind, double x) {
  if (!std::isfinite(x)) return false;
  if (kind == SpaceKind::Circle) return x >= 0.0 && x < 1.0;
  return x >= 0.0 && x <= 1.0;
}

double normalize(SpaceKind kind, double x) {
  if (kind == SpaceKind::UnitInterval) return x;
  double y = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1.
  if (y >= 1.0) y = 0.0;
  return y;
}

std::vector<double> uniform_grid(SpaceKind kind, std::size_t count) {
  std::vector<double> out;
  if (kind == SpaceKind::Circle) {
    if (count < 1) throw std::invalid_argument("circle grid needs at least one point");
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      out.push_back(static_cast<double>(j) / static_cast<double>(count));
    }
    return out;
  }
  if (count < 2) throw std::invalid_argument("interval grid needs at least two points");
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(static_cast<double>(j) / static_cast<double>(count - 1));
  }
  return out;
}

std::vector<double> spacing_net(SpaceKind kind, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("net spacing must be positive");
  const auto cells = static_cast<std::size_t>(std::ceil(1.0 / spacing - 1e-9));
  const std::size_t n = cells == 0 ? 1 : cells;
  return uniform_grid(kind, kind == SpaceKind::Circle ? n : n + 1);
}

double van_der_corput(std::size_t i, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (i > 0) {
    result += f * static_cast<double>(i % base);
    i /= base;
    f /= base;
  }
  return result;
}

}  // namespace naads
