#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "padichg/arith.hpp"
#include "padichg/rational.hpp"

namespace padichg {

/// The arithmetic context (p, r, q = p^r) shared by every module.
struct PrimePower {
  u64 p = 3;
  unsigned r = 1;
  u64 q = 3;

  /// Validates p (odd prime) and r >= 1 and computes q exactly.
  static PrimePower make(u64 p, unsigned r);

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Element of F_{p^r}. The code is the base-p encoding of the residue
/// polynomial, constant coefficient in the lowest digit.
class FqElem {
 public:
  constexpr FqElem() = default;
  constexpr explicit FqElem(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr bool is_zero() const noexcept { return code_ == 0; }

  friend constexpr auto operator<=>(FqElem, FqElem) = default;

 private:
  std::uint32_t code_ = 0;
};

/// F_q with a fixed modulus, a fixed generator and complete exp/log tables.
///
/// Immutable after `build`; copies share the tables, and every query is a
/// pure read, so one instance may be used from many threads.
class FqField {
 public:
  static constexpr u64 kDefaultCap = 1'000'000;

  /// Modulus: the lexicographically smallest monic irreducible of degree r
  /// (coefficients compared constant term first). Generator: the smallest
  /// code of multiplicative order q - 1.
  static FqField build(u64 p, unsigned r, u64 cap = kDefaultCap);

  const PrimePower& ctx() const noexcept { return tables_->ctx; }
  u64 p() const noexcept { return tables_->ctx.p; }
  unsigned r() const noexcept { return tables_->ctx.r; }
  u64 q() const noexcept { return tables_->ctx.q; }

  /// Monic modulus, r + 1 coefficients from the constant term up.
  std::span<const u64> modulus() const noexcept { return tables_->modulus; }
  FqElem generator() const noexcept { return tables_->generator; }

  FqElem zero() const noexcept { return FqElem(0); }
  FqElem one() const noexcept { return FqElem(1); }
  FqElem from_int(i64 value) const;
  FqElem from_rational(const Rational& value) const;
  /// Validates 0 <= code < q.
  FqElem from_code(u64 code) const;
  FqElem from_coeffs(std::span<const u64> coeffs) const;
  std::vector<u64> coeffs(FqElem x) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const;
  FqElem pow(FqElem a, i64 e) const;
  FqElem square(FqElem a) const { return mul(a, a); }

  /// Discrete log against `generator()`, in [0, q-2]. Throws ZeroInput on 0.
  u64 log(FqElem x) const;
  FqElem exp(u64 k) const;

  /// Quadratic character: 0 at 0, otherwise +1 iff log(x) is even.
  int quad_char(FqElem x) const;

  /// Absolute trace x + x^p + ... + x^{p^{r-1}}, as an integer in [0, p).
  u64 trace(FqElem x) const;

 private:
  struct Tables {
    PrimePower ctx;
    std::vector<u64> modulus;
    FqElem generator;
    std::vector<std::uint32_t> exp;  // size q - 1
    std::vector<std::uint32_t> log;  // size q, log[0] unused
  };

  explicit FqField(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

  std::shared_ptr<const Tables> tables_;
};

/// Polynomial helpers over F_p on coefficient vectors (constant term first).
namespace poly {

/// True iff the monic polynomial `f` (coefficients low-to-high) has no monic
/// factor of degree between 1 and deg(f)/2, checked by trial division.
bool is_irreducible(std::span<const u64> f, u64 p);

/// Lexicographically smallest monic irreducible of degree r over F_p.
std::vector<u64> smallest_irreducible(u64 p, unsigned r);

}  // namespace poly

}  // namespace padichg
