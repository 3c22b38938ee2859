#include "naads/exact_circle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <set>
#include <stdexcept>
#include <utility>

#include "naads/errors.hpp"

namespace naads::exact {
namespace {

mpq_class reduce_mod_one(mpq_class v) {
  v.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  v -= fl;
  return v;
}

mpz_class parse_digits(std::string_view digits) {
  if (digits.empty()) return 0;
  return mpz_class(std::string(digits), 10);
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpq_class parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  const mpz_class num = parse_digits(std::string(int_part) + std::string(frac_part));
  exponent -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class out = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

}  // namespace

double nearest_double(const mpq_class& q) {
  const double d = q.get_d();
  double best = d;
  mpq_class best_err = abs(q - mpq_class(d));
  for (double c : {std::nextafter(d, HUGE_VAL), std::nextafter(d, -HUGE_VAL)}) {
    if (!std::isfinite(c)) continue;
    const mpq_class err = abs(q - mpq_class(c));
    const int order = cmp(err, best_err);
    if (order < 0) {
      best = c;
      best_err = err;
    } else if (order == 0) {
      std::uint64_t bits = 0;
      std::memcpy(&bits, &c, sizeof bits);
      if ((bits & 1) == 0) best = c;
    }
  }
  return best;
}

mpq_class parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }
  return parse_decimal(text);
}

RationalAngle::RationalAngle(const mpq_class& value) : value_(reduce_mod_one(value)) {}

RationalAngle::RationalAngle(long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = reduce_mod_one(mpq_class(num, den));
}

RationalAngle RationalAngle::parse(std::string_view text) {
  return RationalAngle(parse_rational(text));
}

RationalAngle RationalAngle::from_double(double x) { return RationalAngle(mpq_class(x)); }

std::size_t RationalAngle::denominator_bits() const {
  return mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string RationalAngle::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_str();
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
  return RationalAngle(mpq_class(value_ + o.value_));
}

RationalAngle RationalAngle::operator-(const RationalAngle& o) const {
  return RationalAngle(mpq_class(value_ - o.value_));
}

RationalAngle RationalAngle::operator-() const { return RationalAngle(mpq_class(-value_)); }

mpq_class circle_distance(const RationalAngle& a, const RationalAngle& b) {
  mpq_class diff = abs(a.value() - b.value());
  mpq_class other = 1 - diff;
  return diff < other ? diff : other;
}

RationalRotationFamily::RationalRotationFamily(std::string name, Rule rule,
                                               std::size_t max_denominator_bits)
    : name_(std::move(name)),
      rule_(std::move(rule)),
      max_bits_(max_denominator_bits),
      memo_(std::make_shared<Memo>()) {
  if (!rule_) throw ConstructionError("rotation family '" + name_ + "' has no rule");
}

RationalAngle RationalRotationFamily::step(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("map index must be >= 1");
  return RationalAngle(rule_(n));
}

RationalAngle RationalRotationFamily::displacement(std::int64_t n) const {
  const std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  RationalAngle forward;
  {
    std::lock_guard lock(memo_->mutex);
    auto& prefix = memo_->prefix;
    while (prefix.size() <= m) {
      const auto next_index = static_cast<std::int64_t>(prefix.size());
      RationalAngle next = prefix.back() + step(next_index);
      if (next.denominator_bits() > max_bits_) {
        throw BudgetError("rotation family '" + name_ + "': denominator of omega_" +
                          std::to_string(next_index) + " exceeds " +
                          std::to_string(max_bits_) + " bits");
      }
      prefix.push_back(std::move(next));
    }
    forward = prefix[m];
  }
  return n < 0 ? -forward : forward;
}

RationalAngle exact_displacement(const RationalRotationFamily& fam, std::int64_t n) {
  return fam.displacement(n);
}

ExactPeriodicity exact_periodicity(const RationalRotationFamily& fam, std::int64_t r,
                                   std::int64_t horizon) {
  if (r < 1) throw std::invalid_argument("period must be >= 1");
  for (std::int64_t j = 1; j <= horizon; ++j) {
    for (std::int64_t n : {j * r, -j * r}) {
      RationalAngle d = fam.displacement(n);
      if (!d.is_zero()) return ExactPeriodicity{false, n, d};
    }
  }
  return ExactPeriodicity{true, 0, RationalAngle{}};
}

ExactHull exact_hull_from_generators(std::span<const RationalAngle> generators, int depth,
                                     std::size_t max_points) {
  const std::size_t cap = effective_point_budget(max_points);
  std::set<RationalAngle> seen{RationalAngle{}};
  std::vector<RationalAngle> frontier{RationalAngle{}};
  bool exhausted = false;
  for (int level = 0; level < depth && !frontier.empty() && !exhausted; ++level) {
    std::vector<RationalAngle> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        if (seen.size() >= cap) {
          exhausted = true;
          break;
        }
        RationalAngle q = p + g;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
      if (exhausted) break;
    }
    frontier = std::move(next);
  }
  return ExactHull{std::vector<RationalAngle>(seen.begin(), seen.end()), exhausted,
                   !exhausted && frontier.empty()};
}

ExactHull exact_hull_displacements(const RationalRotationFamily& fam, int order_k, int depth,
                                   std::size_t max_points) {
  if (order_k < 1 || depth < 1) throw std::invalid_argument("order_k and depth must be >= 1");
  std::set<RationalAngle> gens;
  for (std::int64_t r = -order_k; r <= order_k; ++r) gens.insert(fam.displacement(r));
  std::vector<RationalAngle> g(gens.begin(), gens.end());
  return exact_hull_from_generators(g, depth, max_points);
}

mpq_class exact_density_gap(std::span<const RationalAngle> angles) {
  if (angles.empty()) throw std::invalid_argument("density gap of an empty set");
  std::vector<RationalAngle> sorted(angles.begin(), angles.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  mpq_class worst = 1 - sorted.back().value() + sorted.front().value();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    mpq_class gap = sorted[i].value() - sorted[i - 1].value();
    if (gap > worst) worst = gap;
  }
  return worst;
}

RationalRotationFamily block_family(const RationalRotationFamily& fam, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("block length must be >= 1");
  auto rule = [fam, r](std::int64_t k) -> mpq_class {
    mpq_class sum = 0;
    for (std::int64_t i = (k - 1) * r + 1; i <= k * r; ++i) sum += fam.step(i).value();
    return sum;
  };
  return RationalRotationFamily(fam.name() + "/block" + std::to_string(r), rule);
}

}  // namespace naads::exact
