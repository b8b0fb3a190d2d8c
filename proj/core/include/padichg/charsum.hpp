#pragma once

#include <complex>
#include <vector>

#include "padichg/ffield.hpp"
#include "padichg/padic.hpp"

/// Character-sum oracles. The complex half evaluates Gauss and Jacobi sums,
/// Greene's and McCarthy's finite-field hypergeometric functions directly in
/// double precision. The p-adic half evaluates Jacobi sums with
/// Teichmuller-valued characters in GR(p^N, r).
///
/// Characters are indexed by discrete-log exponent: k stands for T^k with
/// T(g) = exp(2 pi i / (q-1)) on the field generator g. Every character,
/// including the trivial one, vanishes at 0.
namespace padichg::charsum {

using Complex = std::complex<double>;

inline constexpr u64 kMaxComplexQ = 2500;

/// Root-of-unity tables for T^k and the additive character
/// theta(x) = exp(2 pi i tr(x) / p). Throws FieldTooLarge above kMaxComplexQ.
class CharTable {
 public:
  explicit CharTable(const FqField& field);

  const FqField& field() const noexcept { return field_; }
  u64 q() const noexcept { return field_.q(); }
  /// T^k(x).
  Complex chi(i64 k, FqElem x) const;
  Complex theta(FqElem x) const { return zeta_[field_.trace(x)]; }
  /// k mod (q-1) in [0, q-2].
  u64 index(i64 k) const { return reduce_signed(k, q() - 1); }

 private:
  FqField field_;
  std::vector<Complex> roots_;  // exp(2 pi i j/(q-1))
  std::vector<Complex> zeta_;   // exp(2 pi i j/p)
};

/// g(T^k) = sum_x T^k(x) theta(x).
Complex gauss_sum(i64 k, const CharTable& table);

/// J(T^a, T^b) = sum_x T^a(x) T^b(1 - x).
Complex jacobi_sum_complex(i64 a, i64 b, const CharTable& table);

/// (T^a choose T^b) = T^b(-1)/q * J(T^a, T^{-b}).
Complex binomial(i64 a, i64 b, const CharTable& table);

/// Greene's (n+1)F(n): top = A_0..A_n, bottom = B_1..B_n.
Complex greene_F(const std::vector<i64>& top, const std::vector<i64>& bottom, FqElem x, const CharTable& table);

/// McCarthy's (n+1)F(n)^*: top = A_0..A_n, bottom = B_1..B_n.
Complex mccarthy_Fstar(const std::vector<i64>& top, const std::vector<i64>& bottom, FqElem x,
                       const CharTable& table);

/// g(T^k) g(T^{-k}) = q T^k(-1) - (q-1) delta(T^k), within `tol`.
bool gauss_product_check(i64 k, const CharTable& table, double tol);

/// Davenport-Hasse for m and psi = T^psi_index, relative tolerance `tol`.
/// Throws HypothesisViolation unless q = 1 (mod m).
bool davenport_hasse_check(u64 m, i64 psi_index, const CharTable& table, double tol);

/// -q phi(-1) 2F1(phi, phi; eps | lambda), the Legendre-curve trace predicted
/// by the complex oracle.
Complex koike_trace(FqElem lambda, const CharTable& table);

/// sum_x omega-bar^a(x) omega-bar^b(1 - x) in GR(p^N, r).
GrElem jacobi_sum_padic(i64 a, i64 b, const PadicCtx& ctx, const TeichmullerTable& omega);

/// J(omega-bar^a, omega-bar^b) = -(-p)^e prod_i Gamma_p(<a p^i/(q-1)>) Gamma_p(<b p^i/(q-1)>)
///   / Gamma_p(<(a+b) p^i/(q-1)>),
/// e = sum_i <a p^i/(q-1)> + <b p^i/(q-1)> - <(a+b) p^i/(q-1)>.
/// Throws HypothesisViolation when a, b or a+b is 0 mod q-1.
bool gross_koblitz_jacobi_check(i64 a, i64 b, const PadicCtx& ctx, const TeichmullerTable& omega);

}  // namespace padichg::charsum
