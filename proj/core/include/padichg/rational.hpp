#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "padichg/arith.hpp"

namespace padichg {

/// Exact rational in lowest terms with a positive denominator.
///
/// Backed by 64-bit integers with 128-bit intermediates; every operation
/// checks for overflow and throws `MathError(Errc::Overflow)` instead of
/// wrapping. All values handled here (parameters with small denominators,
/// shifts a*p^i/(q-1) for q below 10^6) stay far inside that range.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i64 value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(i64 num, i64 den);

  static Rational parse(std::string_view text);

  i64 num() const noexcept { return num_; }
  i64 den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }

  i64 floor() const;
  Rational frac() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// num * den^{-1} mod m. Requires gcd(den, m) = 1.
  u64 residue_mod(u64 m) const;

  std::string str() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  i64 num_ = 0;
  i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

inline i64 floor(const Rational& x) { return x.floor(); }
inline Rational frac(const Rational& x) { return x.frac(); }

}  // namespace padichg
