#pragma once

#include "padichg/ffield.hpp"
#include "padichg/padic.hpp"
#include "padichg/rational.hpp"

/// Executable forms of the Gamma_p product identities and the floor /
/// fractional-part identities consumed by the G-function manipulations.
/// Each predicate evaluates both sides independently and compares them
/// exactly (mod p^N for Gamma_p identities, in Q for floor identities).
/// Precondition failures throw HypothesisViolation.
namespace padichg::identities {

/// Gamma_p(x) Gamma_p(1 - x) = (-1)^{a0(x)}.
bool reflection_holds(const Rational& x, const PadicCtx& ctx);

/// Multiplication formula for m with p not dividing m and x(q-1) integral:
///   prod_i prod_{h<m} Gamma_p(<(x+h)/m p^i>)
///     = omega(m^{(1-x)(1-q)}) prod_i Gamma_p(<x p^i>) prod_{0<h<m} Gamma_p(<h p^i/m>).
bool product_formula_holds(const Rational& x, u64 m, const PadicCtx& ctx);

/// omega(t^{-ta}) prod_i Gamma_p(<-t p^i a/(q-1)>) prod_{0<h<t} Gamma_p(<h p^i/t>)
///   = prod_i prod_{h<t} Gamma_p(<p^i (1+h)/t - p^i a/(q-1)>),  0 <= a <= q-2.
bool shifted_down_product_holds(u64 a, u64 t, const PadicCtx& ctx);

/// omega(t^{ta}) prod_i Gamma_p(<t p^i a/(q-1)>) prod_{0<h<t} Gamma_p(<h p^i/t>)
///   = prod_i prod_{h<t} Gamma_p(<p^i h/t + p^i a/(q-1)>),  0 <= a <= q-2.
bool shifted_up_product_holds(u64 a, u64 t, const PadicCtx& ctx);

/// prod_i Gamma_p(<(1 - a/(q-1)) p^i>) Gamma_p(<a p^i/(q-1)>) = (-1)^r omega-bar^a(-1),
/// 0 < a <= q-2.
bool complementary_product_holds(u64 a, const PadicCtx& ctx);

/// prod_i Gamma_p(<(1/2 - a/(q-1)) p^i>) Gamma_p(<(1/2 + a/(q-1)) p^i>) / Gamma_p(<p^i/2>)^2
///   = omega-bar^a(-1),  a != (q-1)/2.
bool half_shift_quotient_holds(u64 a, const PadicCtx& ctx);

/// floor(a p^i/(q-1)) + floor(-d a p^i/(q-1))
///   = sum_{0<h<d} floor(<h p^i/d> - a p^i/(q-1)) - 1,  1 <= a <= q-2, p not dividing d.
bool floor_split_holds(i64 d, u64 a, unsigned i, const PrimePower& pp);

/// floor(l a p^i/(q-1)) = sum_{h<l} floor(<-h p^i/l> + a p^i/(q-1)),  p not dividing l.
bool floor_multiple_holds(i64 l, u64 a, unsigned i, const PrimePower& pp);

/// floor(<x p^i> -+ 2 j p^i/(q-1))
///   = floor(<x p^i/2> -+ j p^i/(q-1)) + floor(<(1+x) p^i/2> -+ j p^i/(q-1)).
/// `subtract` selects the minus-sign form.
bool floor_halving_holds(const Rational& x, u64 j, unsigned i, const PrimePower& pp, bool subtract);

/// For q = 1 (mod 4), n not in {(q-1)/4, 3(q-1)/4}: the four-term quotient
/// around 1/4 and 3/4, weighted by (-p)^{sum_i s_{i,n}}, equals 1.
bool quarter_quotient_holds(u64 n, const PadicCtx& ctx);

/// For r = 1 and p = -1 (mod d), 0 <= n <= p-2: the quotient of
/// Gamma_p(<-1/d + n/(p-1)>) Gamma_p(<-(d-1)/d + n/(p-1)>) Gamma_p(<1/d - n/(p-1)>)
/// Gamma_p(<(d-1)/d - n/(p-1)>) by Gamma_p(1/d)^2 Gamma_p((d-1)/d)^2 equals 1.
bool root_pair_quotient_holds(u64 d, u64 n, const PadicCtx& ctx);

}  // namespace padichg::identities
