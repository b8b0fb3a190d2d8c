#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "padichg/arith.hpp"
#include "padichg/ffield.hpp"
#include "padichg/rational.hpp"

namespace padichg {

/// Residue of a p-adic integer modulo p^N.
class PadicInt {
 public:
  PadicInt() = default;
  PadicInt(u64 value, u64 modulus) : value_(value % modulus), modulus_(modulus) {}
  static PadicInt from_signed(i64 value, u64 modulus) { return {reduce_signed(value, modulus), modulus}; }

  u64 value() const noexcept { return value_; }
  u64 modulus() const noexcept { return modulus_; }

  /// Representative in (-modulus/2, modulus/2].
  i64 symmetric() const noexcept {
    return value_ > modulus_ / 2 ? static_cast<i64>(value_) - static_cast<i64>(modulus_) : static_cast<i64>(value_);
  }

  PadicInt operator-() const { return {submod(0, value_, modulus_), modulus_}; }
  friend PadicInt operator+(PadicInt a, PadicInt b) { return {addmod(a.value_, b.value_, a.modulus_), a.modulus_}; }
  friend PadicInt operator-(PadicInt a, PadicInt b) { return {submod(a.value_, b.value_, a.modulus_), a.modulus_}; }
  friend PadicInt operator*(PadicInt a, PadicInt b) { return {mulmod(a.value_, b.value_, a.modulus_), a.modulus_}; }
  friend bool operator==(PadicInt a, PadicInt b) = default;

  /// Throws NonUnitInverse when p divides the value.
  PadicInt inverse() const;

 private:
  u64 value_ = 0;
  u64 modulus_ = 1;
};

/// Element of GR(p^N, r) = (Z/p^N)[x]/(f), r coefficients from the constant
/// term up.
struct GrElem {
  std::vector<u64> coeffs;

  friend bool operator==(const GrElem&, const GrElem&) = default;
};

/// Precision-N arithmetic context over the unramified extension of degree r.
///
/// The modulus is the companion field's modulus read with integer
/// coefficients in [0, p). Gamma values come from a prefix-product table
/// over [0, p^N) when p^N <= kGammaTableLimit, from sparse checkpoints of
/// that table up to kCheckpointLimit, and from a lock-protected memo of
/// direct products beyond. Either way the context is safe to
/// share across threads.
class PadicCtx {
 public:
  static constexpr u64 kGammaTableLimit = 10'000'000;
  static constexpr u64 kCheckpointLimit = 2'000'000'000;

  PadicCtx(const FqField& field, unsigned precision);

  const FqField& field() const noexcept { return field_; }
  u64 p() const noexcept { return field_.p(); }
  unsigned r() const noexcept { return field_.r(); }
  u64 q() const noexcept { return field_.q(); }
  unsigned precision() const noexcept { return precision_; }
  /// p^N.
  u64 modulus() const noexcept { return pN_; }
  std::span<const u64> poly_modulus() const noexcept { return lifted_; }

  PadicInt make(i64 value) const { return PadicInt::from_signed(value, pN_); }
  PadicInt from_rational(const Rational& x) const;

  /// Gamma_p of the integer residue m in [0, p^N).
  PadicInt gamma_residue(u64 m) const;
  /// Gamma_p(x) mod p^N for x in Q with p not dividing the denominator.
  PadicInt gamma_p(const Rational& x) const;

  // Galois-ring arithmetic.
  GrElem gr_zero() const { return GrElem{std::vector<u64>(r(), 0)}; }
  GrElem gr_one() const { return gr_constant(make(1)); }
  GrElem gr_constant(PadicInt c) const;
  GrElem gr_add(const GrElem& a, const GrElem& b) const;
  GrElem gr_sub(const GrElem& a, const GrElem& b) const;
  GrElem gr_mul(const GrElem& a, const GrElem& b) const;
  GrElem gr_scale(const GrElem& a, PadicInt c) const;
  /// a += c * b, in place.
  void gr_axpy(GrElem& a, PadicInt c, const GrElem& b) const;
  /// Square-and-multiply; negative exponents go through `gr_inverse`.
  GrElem gr_pow(const GrElem& base, i64 e) const;
  /// Newton iteration v <- v(2 - uv) from u^{q-2}. Throws NonUnitInverse.
  GrElem gr_inverse(const GrElem& u) const;
  bool gr_is_constant(const GrElem& a) const;
  bool gr_is_unit(const GrElem& a) const;

  /// Coefficient-wise lift of a field element into [0, p).
  GrElem lift(FqElem x) const;
  /// Reduction mod p.
  FqElem reduce(const GrElem& a) const;

  /// The (q-1)-th root of unity congruent to t mod p. Throws ZeroInput.
  GrElem teichmuller(FqElem t) const;

 private:
  struct GammaCache;

  FqField field_;
  unsigned precision_;
  u64 pN_;
  std::vector<u64> lifted_;
  std::shared_ptr<GammaCache> gamma_;
};

/// omega(g)^k for k in [0, q-2], where g is the field's generator, so that
/// omega(t) = omega(g)^log(t) is a table lookup.
class TeichmullerTable {
 public:
  explicit TeichmullerTable(const PadicCtx& ctx);

  const GrElem& omega_generator_power(u64 k) const { return powers_[k % powers_.size()]; }
  /// omega(t). Throws ZeroInput for t = 0.
  const GrElem& omega(FqElem t) const;
  /// omega-bar^a(t) = omega(t)^{-a}.
  const GrElem& omega_bar_pow(FqElem t, i64 a) const;

 private:
  FqField field_;
  std::vector<GrElem> powers_;
};

/// The representative of x mod p in {1, ..., p}.
u64 a0(const Rational& x, u64 p);

/// Gamma_p(n) = (-1)^n * prod_{0<j<n, p does not divide j} j, reduced mod m.
/// Direct product, no tables.
u64 gamma_by_definition(u64 n, u64 p, u64 m);

}  // namespace padichg
