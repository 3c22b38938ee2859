#pragma once

// Exact arithmetic on the circle group Q/Z for rotation families.
//
// Angles are measured in turns. A RationalAngle is always reduced into
// [0, 1); signed displacements are represented by their residue.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "naads/budget.hpp"

namespace naads::exact {

/// Parses "p/q", an integer, or a finite decimal ("0.125", "-1.5e-3") into
/// an exact rational. Throws std::invalid_argument on malformed input.
mpq_class parse_rational(std::string_view text);

/// Correctly rounded conversion (mpq_get_d truncates).
double nearest_double(const mpq_class& q);

class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(const mpq_class& value);
  RationalAngle(long num, unsigned long den);

  static RationalAngle parse(std::string_view text);
  /// Exact binary value of x, reduced mod 1.
  static RationalAngle from_double(double x);

  const mpq_class& value() const { return value_; }
  double to_double() const { return nearest_double(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  std::size_t denominator_bits() const;
  std::string str() const;

  RationalAngle operator+(const RationalAngle& o) const;
  RationalAngle operator-(const RationalAngle& o) const;
  RationalAngle operator-() const;

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const RationalAngle& a,
                                          const RationalAngle& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// min(|a-b|, 1-|a-b|), exact.
mpq_class circle_distance(const RationalAngle& a, const RationalAngle& b);

/// Default denominator budget; harmonic prefix sums up to n ~ 10^4 fit easily.
inline constexpr std::size_t kDefaultDenominatorBits = 1u << 16;

/// A family of circle rotations with exact rational angles.
///
/// `rule(n)` gives the signed displacement of f_n for n >= 1. Prefix sums are
/// memoized behind a mutex; copies share the memo.
class RationalRotationFamily {
 public:
  using Rule = std::function<mpq_class(std::int64_t)>;

  RationalRotationFamily(std::string name, Rule rule,
                         std::size_t max_denominator_bits = kDefaultDenominatorBits);

  const std::string& name() const { return name_; }

  /// Displacement of the single map f_n, n >= 1.
  RationalAngle step(std::int64_t n) const;

  /// Displacement of omega_n; omega_0 is the identity and
  /// omega_{-n} displaces by the negation of omega_n.
  RationalAngle displacement(std::int64_t n) const;

  const Rule& rule() const { return rule_; }

 private:
  struct Memo {
    std::mutex mutex;
    std::vector<RationalAngle> prefix{RationalAngle{}};
  };

  std::string name_;
  Rule rule_;
  std::size_t max_bits_;
  std::shared_ptr<Memo> memo_;
};

RationalAngle exact_displacement(const RationalRotationFamily& fam, std::int64_t n);

struct ExactPeriodicity {
  bool certified = false;
  /// First failing time jr (least |j|, positive first); 0 when certified.
  std::int64_t witness_n = 0;
  RationalAngle witness_displacement;
};

/// Checks that omega_{jr} is exactly the identity for all |j| <= horizon.
ExactPeriodicity exact_periodicity(const RationalRotationFamily& fam, std::int64_t r,
                                   std::int64_t horizon);

struct ExactHull {
  std::vector<RationalAngle> angles;  // sorted ascending, no duplicates
  bool budget_exhausted = false;
  /// The breadth-first frontier emptied: the set is closed under the generators.
  bool stabilized = false;
};

/// All sums of at most `depth` generators (0 included), reduced mod 1.
ExactHull exact_hull_from_generators(std::span<const RationalAngle> generators,
                                     int depth,
                                     std::size_t max_points = kDefaultMaxPoints);

/// Displacement set of the order-k truncated hull: sums of <= depth terms
/// drawn from {displacement(r) : |r| <= order_k}.
ExactHull exact_hull_displacements(const RationalRotationFamily& fam, int order_k,
                                   int depth,
                                   std::size_t max_points = kDefaultMaxPoints);

/// Largest circular gap between consecutive angles. A single angle leaves
/// the whole circle (gap 1).
mpq_class exact_density_gap(std::span<const RationalAngle> angles);

/// Block family: its k-th map is the composite of f_{(k-1)r+1} .. f_{kr}.
RationalRotationFamily block_family(const RationalRotationFamily& fam, std::int64_t r);

}  // namespace naads::exact
