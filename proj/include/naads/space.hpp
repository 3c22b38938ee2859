#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace naads {

/// The two phase spaces. Circle coordinates are in turns, so both spaces
/// use the numbers [0,1]; the circle identifies 0 with 1 and stores [0,1).
enum class SpaceKind { UnitInterval, Circle };

std::string_view to_string(SpaceKind kind);
SpaceKind parse_space(std::string_view text);

/// |x-y| on the interval, min(|x-y|, 1-|x-y|) on the circle.
double distance(SpaceKind kind, double x, double y);

/// 1 for the interval, 1/2 for the circle.
double diameter(SpaceKind kind);

bool contains(SpaceKind kind, double x);

/// Wraps into [0,1) on the circle; identity on the interval.
double normalize(SpaceKind kind, double x);

/// `count` evenly spaced points: j/count on the circle, j/(count-1) on the
/// interval (both endpoints included). Requires count >= 2 on the interval.
std::vector<double> uniform_grid(SpaceKind kind, std::size_t count);

/// Uniform net whose spacing is at most `spacing`.
std::vector<double> spacing_net(SpaceKind kind, double spacing);

/// Van der Corput radical inverse of i in base 2, in [0,1).
double van_der_corput(std::size_t i, unsigned base = 2);

}  // namespace naads
