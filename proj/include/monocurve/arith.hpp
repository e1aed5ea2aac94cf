#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace monocurve {

// Floor and ceiling of a/b for b > 0, correct for negative a.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::domain_error("floor_div: non-positive divisor");
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

// Non-negative remainder.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

/// Exact rational with positive denominator, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr std::int64_t floor() const { return floor_div(num, den); }
  constexpr std::int64_t ceil() const { return ceil_div(num, den); }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  // Compares a/b with an integer without leaving exact arithmetic.
  friend constexpr bool operator<(std::int64_t lhs, const Rational& r) {
    return static_cast<__int128>(lhs) * r.den < r.num;
  }
  friend constexpr bool operator<=(std::int64_t lhs, const Rational& r) {
    return static_cast<__int128>(lhs) * r.den <= r.num;
  }
};

}  // namespace monocurve
