#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's evaluation code: maps are written out by hand and rationals use
// plain 128-bit integer arithmetic.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// Small rational reduced mod 1 into [0,1).
struct Frac {
  __int128 p = 0;
  __int128 q = 1;
};

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Frac mod1(__int128 p, __int128 q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  p %= q;
  if (p < 0) p += q;
  const __int128 g = gcd128(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (p == 0) q = 1;
  return {p, q};
}

inline Frac add(Frac a, Frac b) { return mod1(a.p * b.q + b.p * a.q, a.q * b.q); }
inline Frac neg(Frac a) { return mod1(-a.p, a.q); }
inline bool eq(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
inline double to_double(Frac a) { return static_cast<double>(a.p) / static_cast<double>(a.q); }

// Signed steps of the rotation families, written from their definitions.
inline Frac settling_step(std::int64_t n) {
  if (n == 1) return mod1(1, 2);
  if (n == 2) return mod1(-1, 4);
  if (n % 2 == 1) return mod1(1, __int128(1) << ((n - 1) / 2));
  const std::int64_t k = n / 2;
  // -(1/2^k + 1/2^(k+1)) = -3/2^(k+1)
  return mod1(-3, __int128(1) << (k + 1));
}

inline Frac ex4_step(std::int64_t n) {
  for (std::int64_t k = 1;; ++k) {
    if (n == 4 * k || n == 4 * k - 3) return mod1(1, __int128(1) << k);
    if (n == 4 * k - 1 || n == 4 * k - 2) return mod1(-1, __int128(1) << k);
  }
}

inline Frac harmonic_sum(std::int64_t k) {
  Frac h{0, 1};
  __int128 p = 0, q = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    p = p * i + q;
    q = q * i;
    const __int128 g = gcd128(p, q);
    p /= g;
    q /= g;
  }
  h = mod1(p, q);
  return h;
}

inline Frac harmonic_step(std::int64_t n) {
  const Frac h = harmonic_sum((n + 1) / 2);
  return n % 2 == 1 ? h : neg(h);
}

template <class Step>
Frac displacement(Step step, std::int64_t n) {
  Frac d{0, 1};
  const std::int64_t m = n < 0 ? -n : n;
  for (std::int64_t i = 1; i <= m; ++i) d = add(d, step(i));
  return n < 0 ? neg(d) : d;
}

// Tent and root-flip maps by hand.
inline double tent(double x) { return x <= 0.5 ? x / 2.0 : 1.5 * x - 0.5; }
inline double tent_inv(double y) { return y <= 0.25 ? 2.0 * y : (y + 0.5) / 1.5; }
inline double root_flip(double x) { return 1.0 - std::sqrt(x); }
inline double root_flip_inv(double y) { return (1.0 - y) * (1.0 - y); }

inline double example1_forward(std::int64_t n, double x) {
  for (std::int64_t i = 1; i <= n; ++i) x = (i % 2 == 1) ? tent(x) : root_flip(x);
  return x;
}

// Inverse of omega_n: f_1^{-1} o ... o f_n^{-1}.
inline double example1_backward(std::int64_t n, double x) {
  for (std::int64_t i = n; i >= 1; --i) x = (i % 2 == 1) ? tent_inv(x) : root_flip_inv(x);
  return x;
}

inline double circle_dist(double a, double b) {
  double d = std::fabs(a - b);
  d = d - std::floor(d);
  return std::min(d, 1.0 - d);
}

// Radical inverse, used for low-discrepancy pair sampling.
inline double halton(std::uint64_t i, std::uint64_t base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

// Deterministic generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1p-53; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace oracle
