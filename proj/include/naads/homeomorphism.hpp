#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "naads/exact_circle.hpp"
#include "naads/space.hpp"

namespace naads {

enum class Direction { Forward, Inverse };

/// Positive rational p/q with small integer parts (power-map exponents).
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

/// One invertible self-map of the interval or the circle.
///
/// Immutable once built; construction validates the data so evaluation
/// only has to check the argument's domain.
class Homeomorphism {
 public:
  /// Increasing piecewise-linear map through (x, f(x)) breakpoints.
  struct PiecewiseLinear {
    std::vector<std::pair<double, double>> breakpoints;
  };
  /// x -> x^p on [0,1].
  struct PowerMap {
    Ratio exponent;
  };
  /// x -> x + angle (mod 1). `exact` is set when the angle is rational.
  struct CircleRotation {
    double turns = 0.0;
    std::optional<exact::RationalAngle> exact;
  };
  /// x -> 1 - x (mod 1 on the circle); the orientation-reversing involution.
  struct Reflection {};
  /// Applies parts front to back.
  struct Composite {
    std::vector<Homeomorphism> parts;
  };

  using Variant = std::variant<PiecewiseLinear, PowerMap, CircleRotation, Reflection, Composite>;

  static Homeomorphism piecewise_linear(std::vector<std::pair<double, double>> breakpoints);
  static Homeomorphism power(std::int64_t num, std::int64_t den = 1);
  static Homeomorphism rotation(double turns);
  static Homeomorphism rotation(const exact::RationalAngle& angle);
  static Homeomorphism reflection(SpaceKind space);
  static Homeomorphism identity(SpaceKind space);
  /// Composite applying `parts` in order. Nested composites are flattened and
  /// a run made only of exact rotations collapses to one exact rotation.
  static Homeomorphism composite(std::vector<Homeomorphism> parts);

  SpaceKind space() const { return space_; }
  const Variant& variant() const { return v_; }

  double forward(double x) const;
  double inverse(double x) const;
  double eval(double x, Direction dir) const {
    return dir == Direction::Forward ? forward(x) : inverse(x);
  }

  /// Exact rotation angle when this map is a rotation by a rational angle.
  std::optional<exact::RationalAngle> exact_rotation() const;

  std::string describe() const;

 private:
  Homeomorphism(Variant v, SpaceKind space) : v_(std::move(v)), space_(space) {}

  double apply(double x, Direction dir) const;

  Variant v_;
  SpaceKind space_;
};

}  // namespace naads
