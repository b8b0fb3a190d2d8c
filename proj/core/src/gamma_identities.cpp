#include "padichg/gamma_identities.hpp"

#include <string>

#include "padichg/error.hpp"

namespace padichg::identities {
namespace {

Rational power_of(u64 p, unsigned i) { return Rational(static_cast<i64>(*checked_pow(p, i))); }

Rational over_q1(i64 a, u64 q) { return Rational(a, static_cast<i64>(q - 1)); }

PadicInt gamma_frac(const PadicCtx& ctx, const Rational& x) { return ctx.gamma_p(x.frac()); }

/// omega(m^e) for an integer m prime to p, as a Galois-ring element.
GrElem omega_of_int_power(const PadicCtx& ctx, i64 m, i64 e) {
  const FqField& F = ctx.field();
  return ctx.teichmuller(F.pow(F.from_int(m), e));
}

void require_prime_to_p(i64 m, u64 p, const char* what) {
  require(m >= 1 && reduce_signed(m, p) != 0, Errc::HypothesisViolation,
          std::string(what) + " must be positive and prime to p");
}

}  // namespace

bool reflection_holds(const Rational& x, const PadicCtx& ctx) {
  const PadicInt lhs = ctx.gamma_p(x) * ctx.gamma_p(Rational(1) - x);
  const i64 sign = (a0(x, ctx.p()) % 2 == 0) ? 1 : -1;
  return lhs == ctx.make(sign);
}

bool product_formula_holds(const Rational& x, u64 m, const PadicCtx& ctx) {
  const u64 p = ctx.p(), q = ctx.q();
  require_prime_to_p(static_cast<i64>(m), p, "m");
  const Rational exponent = (Rational(1) - x) * Rational(1 - static_cast<i64>(q));
  require(exponent.is_integer(), Errc::HypothesisViolation, "x(q-1) must be an integer");

  PadicInt lhs = ctx.make(1);
  PadicInt rhs_scalar = ctx.make(1);
  const Rational mm(static_cast<i64>(m));
  for (unsigned i = 0; i < ctx.r(); ++i) {
    const Rational pi = power_of(p, i);
    for (u64 h = 0; h < m; ++h) lhs = lhs * gamma_frac(ctx, (x + Rational(static_cast<i64>(h))) / mm * pi);
    rhs_scalar = rhs_scalar * gamma_frac(ctx, x * pi);
    for (u64 h = 1; h < m; ++h) rhs_scalar = rhs_scalar * gamma_frac(ctx, Rational(static_cast<i64>(h)) / mm * pi);
  }
  const GrElem rhs = ctx.gr_scale(omega_of_int_power(ctx, static_cast<i64>(m), exponent.num()), rhs_scalar);
  return ctx.gr_constant(lhs) == rhs;
}

bool shifted_down_product_holds(u64 a, u64 t, const PadicCtx& ctx) {
  const u64 p = ctx.p(), q = ctx.q();
  require(a <= q - 2, Errc::HypothesisViolation, "a must lie in [0, q-2]");
  require_prime_to_p(static_cast<i64>(t), p, "t");
  const i64 ti = static_cast<i64>(t), ai = static_cast<i64>(a);
  PadicInt lhs_scalar = ctx.make(1), rhs = ctx.make(1);
  for (unsigned i = 0; i < ctx.r(); ++i) {
    const Rational pi = power_of(p, i);
    const Rational shift = over_q1(ai, q) * pi;
    lhs_scalar = lhs_scalar * gamma_frac(ctx, -Rational(ti) * shift);
    for (i64 h = 1; h < ti; ++h) lhs_scalar = lhs_scalar * gamma_frac(ctx, Rational(h, ti) * pi);
    for (i64 h = 0; h < ti; ++h) rhs = rhs * gamma_frac(ctx, Rational(1 + h, ti) * pi - shift);
  }
  const GrElem lhs = ctx.gr_scale(omega_of_int_power(ctx, ti, -ti * ai), lhs_scalar);
  return lhs == ctx.gr_constant(rhs);
}

bool shifted_up_product_holds(u64 a, u64 t, const PadicCtx& ctx) {
  const u64 p = ctx.p(), q = ctx.q();
  require(a <= q - 2, Errc::HypothesisViolation, "a must lie in [0, q-2]");
  require_prime_to_p(static_cast<i64>(t), p, "t");
  const i64 ti = static_cast<i64>(t), ai = static_cast<i64>(a);
  PadicInt lhs_scalar = ctx.make(1), rhs = ctx.make(1);
  for (unsigned i = 0; i < ctx.r(); ++i) {
    const Rational pi = power_of(p, i);
    const Rational shift = over_q1(ai, q) * pi;
    lhs_scalar = lhs_scalar * gamma_frac(ctx, Rational(ti) * shift);
    for (i64 h = 1; h < ti; ++h) lhs_scalar = lhs_scalar * gamma_frac(ctx, Rational(h, ti) * pi);
    for (i64 h = 0; h < ti; ++h) rhs = rhs * gamma_frac(ctx, Rational(h, ti) * pi + shift);
  }
  const GrElem lhs = ctx.gr_scale(omega_of_int_power(ctx, ti, ti * ai), lhs_scalar);
  return lhs == ctx.gr_constant(rhs);
}

bool complementary_product_holds(u64 a, const PadicCtx& ctx) {
  const u64 q = ctx.q();
  require(a >= 1 && a <= q - 2, Errc::HypothesisViolation, "a must lie in [1, q-2]");
  PadicInt lhs = ctx.make(1);
  for (unsigned i = 0; i < ctx.r(); ++i) {
    const Rational pi = power_of(ctx.p(), i);
    const Rational s = over_q1(static_cast<i64>(a), q);
    lhs = lhs * gamma_frac(ctx, (Rational(1) - s) * pi) * gamma_frac(ctx, s * pi);
  }
  // omega-bar^a(-1) = (-1)^a since omega(-1) = -1.
  const i64 sign = ((ctx.r() + a) % 2 == 0) ? 1 : -1;
  return lhs == ctx.make(sign);
}

bool half_shift_quotient_holds(u64 a, const PadicCtx& ctx) {
  const u64 q = ctx.q();
  require(a <= q - 2 && 2 * a != q - 1, Errc::HypothesisViolation, "a must lie in [0, q-2] and differ from (q-1)/2");
  const Rational half(1, 2);
  PadicInt num = ctx.make(1), den = ctx.make(1);
  for (unsigned i = 0; i < ctx.r(); ++i) {
    const Rational pi = power_of(ctx.p(), i);
    const Rational s = over_q1(static_cast<i64>(a), q);
    num = num * gamma_frac(ctx, (half - s) * pi) * gamma_frac(ctx, (half + s) * pi);
    const PadicInt g = gamma_frac(ctx, half * pi);
    den = den * g * g;
  }
  return num == ctx.make(a % 2 == 0 ? 1 : -1) * den;
}

bool floor_split_holds(i64 d, u64 a, unsigned i, const PrimePower& pp) {
  require(d >= 2 && reduce_signed(d, pp.p) != 0, Errc::HypothesisViolation, "d must be >= 2 and prime to p");
  require(a >= 1 && a <= pp.q - 2, Errc::HypothesisViolation, "a must lie in [1, q-2]");
  const Rational pi = power_of(pp.p, i);
  const Rational s = over_q1(static_cast<i64>(a), pp.q) * pi;
  const i64 lhs = s.floor() + (Rational(-d) * s).floor();
  i64 rhs = -1;
  for (i64 h = 1; h < d; ++h) rhs += ((Rational(h, d) * pi).frac() - s).floor();
  return lhs == rhs;
}

bool floor_multiple_holds(i64 l, u64 a, unsigned i, const PrimePower& pp) {
  require(l >= 1 && reduce_signed(l, pp.p) != 0, Errc::HypothesisViolation, "l must be positive and prime to p");
  require(a <= pp.q - 2, Errc::HypothesisViolation, "a must lie in [0, q-2]");
  const Rational pi = power_of(pp.p, i);
  const Rational s = over_q1(static_cast<i64>(a), pp.q) * pi;
  const i64 lhs = (Rational(l) * s).floor();
  i64 rhs = 0;
  for (i64 h = 0; h < l; ++h) rhs += ((Rational(-h, l) * pi).frac() + s).floor();
  return lhs == rhs;
}

bool floor_halving_holds(const Rational& x, u64 j, unsigned i, const PrimePower& pp, bool subtract) {
  require(j <= pp.q - 2, Errc::HypothesisViolation, "j must lie in [0, q-2]");
  const Rational pi = power_of(pp.p, i);
  Rational s = over_q1(static_cast<i64>(j), pp.q) * pi;
  if (subtract) s = -s;
  const Rational half(1, 2);
  const i64 lhs = ((x * pi).frac() + Rational(2) * s).floor();
  const i64 rhs = ((x * pi * half).frac() + s).floor() + (((Rational(1) + x) * pi * half).frac() + s).floor();
  return lhs == rhs;
}

bool quarter_quotient_holds(u64 n, const PadicCtx& ctx) {
  const u64 q = ctx.q();
  require(q % 4 == 1, Errc::HypothesisViolation, "q must be 1 mod 4");
  require(n <= q - 2 && 4 * n != q - 1 && 4 * n != 3 * (q - 1), Errc::HypothesisViolation,
          "n must avoid (q-1)/4 and 3(q-1)/4");
  const Rational quarter(1, 4), three_quarters(3, 4);
  i64 s_total = 0;
  PadicInt num = ctx.make(1), den = ctx.make(1);
  for (unsigned i = 0; i < ctx.r(); ++i) {
    const Rational pi = power_of(ctx.p(), i);
    const Rational u = over_q1(static_cast<i64>(n), q);
    const Rational s = u * pi;
    s_total += -(three_quarters - s).floor() - (quarter + s).floor() - (three_quarters + s).floor() -
               (quarter - s).floor();
    num = num * gamma_frac(ctx, (quarter + u) * pi) * gamma_frac(ctx, (three_quarters - u) * pi) *
          gamma_frac(ctx, (quarter - u) * pi) * gamma_frac(ctx, (three_quarters + u) * pi);
    const PadicInt g = gamma_frac(ctx, three_quarters * pi) * gamma_frac(ctx, quarter * pi);
    den = den * g * g;
  }
  // A negative total would put the left side outside Z_p; it cannot equal 1.
  if (s_total < 0) return false;
  PadicInt weight = ctx.make(1);
  for (i64 k = 0; k < s_total; ++k) weight = weight * ctx.make(-static_cast<i64>(ctx.p()));
  return weight * num == den;
}

bool root_pair_quotient_holds(u64 d, u64 n, const PadicCtx& ctx) {
  const u64 p = ctx.p();
  require(ctx.r() == 1, Errc::HypothesisViolation, "root-pair quotient is stated over F_p");
  require(d >= 2 && (p + 1) % d == 0, Errc::HypothesisViolation, "p must be -1 mod d");
  require(n <= p - 2, Errc::HypothesisViolation, "n must lie in [0, p-2]");
  const i64 di = static_cast<i64>(d);
  const Rational u(static_cast<i64>(n), static_cast<i64>(p - 1));
  const Rational inv_d(1, di), co_d(di - 1, di);
  const PadicInt num = gamma_frac(ctx, -inv_d + u) * gamma_frac(ctx, -co_d + u) * gamma_frac(ctx, inv_d - u) *
                       gamma_frac(ctx, co_d - u);
  const PadicInt g1 = ctx.gamma_p(inv_d), g2 = ctx.gamma_p(co_d);
  return num == g1 * g1 * g2 * g2;
}

}  // namespace padichg::identities
