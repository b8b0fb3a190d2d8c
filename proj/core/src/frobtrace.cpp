#include "padichg/frobtrace.hpp"

#include <string>

#include "padichg/error.hpp"

namespace padichg::frobtrace {
namespace {

Rational q(i64 n, i64 d) { return Rational(n, d); }

std::vector<Rational> four_top() { return {0, q(1, 2), 0, q(1, 2)}; }

i64 pow_signed(i64 base, unsigned e) {
  i64 out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

/// -(-p)^{r/2} for even r, 0 for odd r.
i64 parity_term(u64 p, unsigned r) { return r % 2 == 0 ? -pow_signed(-static_cast<i64>(p), r / 2) : 0; }

i64 evaluate_integer(const GShape& shape, FqElem t, const GEvaluator& eval) {
  const GValue v = eval.evaluate(GParams{shape.top, shape.bottom, t});
  return reconstruct_integer(v, eval.ctx().p(), default_trace_bound(eval.ctx().q()));
}

GEvaluator evaluator_for(const FqField& field) {
  return GEvaluator(PadicCtx(field, choose_precision(field.p(), default_trace_bound(field.q()))));
}

bool p_in(u64 p, u64 mod, std::initializer_list<u64> classes) {
  for (u64 c : classes) {
    if (p % mod == c) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T13: return "t13";
    case Theorem::T14: return "t14";
    case Theorem::T15: return "t15";
    case Theorem::T16: return "t16";
    case Theorem::T17_1: return "t17-1";
    case Theorem::T17_2: return "t17-2";
    case Theorem::T17_3: return "t17-3";
    case Theorem::T18: return "t18";
    case Theorem::T19: return "t19";
    case Theorem::T110: return "t110";
    case Theorem::T111: return "t111";
  }
  return "?";
}

std::optional<i64> ordp(const Rational& x, u64 p) {
  if (x.num() == 0) return std::nullopt;
  auto val = [p](i64 n) {
    u64 m = static_cast<u64>(n < 0 ? -n : n);
    i64 v = 0;
    while (m % p == 0) {
      m /= p;
      ++v;
    }
    return v;
  };
  return val(x.num()) - val(x.den());
}

FqElem reduce_rational(const Rational& x, const FqField& field) {
  require(reduce_signed(x.den(), field.p()) != 0, Errc::HypothesisViolation,
          x.str() + " does not reduce mod " + std::to_string(field.p()));
  return field.from_rational(x);
}

GShape shape_of(Theorem t) {
  switch (t) {
    case Theorem::T13:
    case Theorem::T18: return {four_top(), {q(1, 4), q(3, 4), q(1, 4), q(3, 4)}};
    case Theorem::T14:
    case Theorem::T19: return {four_top(), {q(1, 6), q(1, 3), q(2, 3), q(5, 6)}};
    case Theorem::T15:
    case Theorem::T110: return {four_top(), {q(1, 8), q(3, 8), q(5, 8), q(7, 8)}};
    case Theorem::T16:
    case Theorem::T111:
      return {{0, q(1, 2), 0, q(1, 2), q(1, 4), q(3, 4)},
              {q(1, 12), q(1, 4), q(5, 12), q(7, 12), q(3, 4), q(11, 12)}};
    case Theorem::T17_1:
    case Theorem::T17_2:
    case Theorem::T17_3: return {four_top(), {q(1, 12), q(5, 12), q(7, 12), q(11, 12)}};
  }
  throw std::logic_error("unknown theorem");
}

void check_field_hypotheses(Theorem t, const PrimePower& pp) {
  const std::string name(to_string(t));
  switch (t) {
    case Theorem::T13:
    case Theorem::T15: return;
    case Theorem::T14:
    case Theorem::T16: require(pp.p > 3, Errc::HypothesisViolation, name + " needs p > 3"); return;
    case Theorem::T17_1:
      require(pp.p > 3 && p_in(pp.q, 12, {1, 7}), Errc::HypothesisViolation, name + " needs q = 1, 7 (mod 12)");
      return;
    case Theorem::T17_2:
      require(pp.p > 3 && pp.q % 12 == 5, Errc::HypothesisViolation, name + " needs q = 5 (mod 12)");
      return;
    case Theorem::T17_3:
      require(pp.p % 12 == 11 && pp.r == 1, Errc::HypothesisViolation, name + " needs p = 11 (mod 12) and r = 1");
      return;
    default: fail(Errc::HypothesisViolation, name + " is not a pair theorem over F_q");
  }
}

std::pair<CurveSpec, CurveSpec> pair_curves(const PairInstance& inst, const FqField& F) {
  switch (inst.theorem) {
    case Theorem::T13: return {Legendre{inst.u}, Legendre{F.neg(inst.u)}};
    case Theorem::T14: return {A1A3{inst.u, inst.v}, A1A3{inst.u, F.neg(inst.v)}};
    case Theorem::T15: return {FG{inst.u, inst.v}, FG{inst.u, F.neg(inst.v)}};
    case Theorem::T16:
    case Theorem::T17_1:
    case Theorem::T17_2:
    case Theorem::T17_3: return {CD{inst.u, inst.v}, CD{inst.u, F.neg(inst.v)}};
    default: fail(Errc::HypothesisViolation, std::string(to_string(inst.theorem)) + " is not a pair theorem");
  }
}

PairResult trace_sum_pair(const PairInstance& inst, const GEvaluator& eval) {
  const FqField& F = eval.ctx().field();
  check_field_hypotheses(inst.theorem, F.ctx());
  const auto [first, second] = pair_curves(inst, F);

  PairResult out;
  out.lhs = trace_of_frobenius(first, F) + trace_of_frobenius(second, F);

  auto phi = [&](FqElem x) { return F.quad_char(x); };
  const FqElem u = inst.u, v = inst.v;
  switch (inst.theorem) {
    case Theorem::T13:
      out.argument = F.square(u);
      out.prefactor = phi(F.from_int(-1));
      break;
    case Theorem::T14:
      // 729 a3^2 / a1^6
      out.argument = F.div(F.mul(F.from_int(729), F.square(v)), F.pow(u, 6));
      break;
    case Theorem::T15:
      // 16 g^2 / f^4
      out.argument = F.div(F.mul(F.from_int(16), F.square(v)), F.pow(u, 4));
      out.prefactor = phi(u);
      break;
    default:
      // 729 d^2 / (16 c^6)
      out.argument = F.div(F.mul(F.from_int(729), F.square(v)), F.mul(F.from_int(16), F.pow(u, 6)));
      out.prefactor = inst.theorem == Theorem::T17_1 ? phi(F.mul(F.from_int(-3), u)) : phi(u);
      if (inst.theorem == Theorem::T16) out.correction = -phi(v) - phi(F.neg(v));
      break;
  }
  out.g_value = evaluate_integer(shape_of(inst.theorem), out.argument, eval);
  out.rhs = out.prefactor * out.g_value + out.correction;
  return out;
}

i64 frobenius_power_series(i64 ap, u64 p, bool good, unsigned r) {
  const i64 pi = good ? static_cast<i64>(p) : 0;
  i64 prev = 1, cur = ap;  // a_1, a_p
  if (r == 0) return 1;
  for (unsigned k = 2; k <= r; ++k) {
    const i64 next = ap * cur - pi * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

i64 frobenius_power_trace(i64 ap, u64 p, unsigned r) {
  const i64 pi = static_cast<i64>(p);
  i64 prev = 2, cur = ap;
  if (r == 0) return 2;
  for (unsigned k = 2; k <= r; ++k) {
    const i64 next = ap * cur - pi * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void check_rational_hypotheses(const RationalInstance& inst) {
  const u64 p = inst.p;
  require(is_prime(p) && p > 3, Errc::HypothesisViolation, "p must be a prime >= 5");
  require(inst.r >= 1, Errc::HypothesisViolation, "r must be positive");
  const std::string name(to_string(inst.theorem));
  if (inst.theorem == Theorem::T18) {
    require(inst.param == Rational(2) || inst.param == Rational(1, 2), Errc::HypothesisViolation,
            "t18 needs lambda in {2, 1/2}");
    require(p % 4 == 3, Errc::HypothesisViolation, "t18 needs p = 3 (mod 4)");
    return;
  }
  require(inst.param.num() != 0, Errc::HypothesisViolation, name + " needs alpha != 0");
  require(ordp(inst.param, p) == 0, Errc::HypothesisViolation, name + " needs ord_p(alpha) = 0");
  switch (inst.theorem) {
    case Theorem::T19:
      require(p_in(p, 12, {5, 11}), Errc::HypothesisViolation, "t19 needs p = 5, 11 (mod 12)");
      require(p != 17, Errc::HypothesisViolation, "t19 excludes p = 17");
      return;
    case Theorem::T110:
      require(p_in(p, 12, {5, 11}), Errc::HypothesisViolation, "t110 needs p = 5, 11 (mod 12)");
      return;
    case Theorem::T111:
      require(p_in(p, 12, {7, 11}), Errc::HypothesisViolation, "t111 needs p = 7, 11 (mod 12)");
      return;
    default: fail(Errc::HypothesisViolation, name + " is not a theorem over Q");
  }
}

std::pair<CurveSpec, CurveSpec> rational_curves(const RationalInstance& inst, const FqField& F) {
  const Rational a = inst.param;
  auto red = [&](const Rational& x) { return reduce_rational(x, F); };
  switch (inst.theorem) {
    case Theorem::T18: return {Legendre{red(-a)}, Legendre{red(a)}};
    case Theorem::T19: {
      const Rational a3 = a * a * a / Rational(24);
      return {A1A3{red(a), red(-a3)}, A1A3{red(a), red(a3)}};
    }
    case Theorem::T110: {
      const Rational g = a * a / Rational(3);
      return {FG{red(a), red(-g)}, FG{red(a), red(g)}};
    }
    case Theorem::T111: {
      const Rational d = Rational(2) * a * a * a / Rational(27);
      return {CD{red(a), red(d)}, CD{red(a), red(-d)}};
    }
    default: fail(Errc::HypothesisViolation, std::string(to_string(inst.theorem)) + " is not a theorem over Q");
  }
}

RationalResult rational_curve_trace(const RationalInstance& inst) {
  check_rational_hypotheses(inst);
  const FqField Fp = FqField::build(inst.p, 1);
  const FqField Fq = FqField::build(inst.p, inst.r);
  const auto [curve_p, partner_p] = rational_curves(inst, Fp);
  const auto [curve_q, partner_q] = rational_curves(inst, Fq);

  RationalResult out;
  out.good_reduction = !discriminant(to_weierstrass(curve_p, Fp), Fp).is_zero();
  require(out.good_reduction, Errc::SingularCurve,
          std::string(to_string(inst.theorem)) + " curve has bad reduction at p = " + std::to_string(inst.p));
  out.ap = trace_of_frobenius(curve_p, Fp);
  out.partner_ap = trace_of_frobenius(partner_p, Fp);
  out.counted = trace_of_frobenius(curve_q, Fq);
  out.recurrence = frobenius_power_series(out.ap, inst.p, out.good_reduction, inst.r);
  out.power_trace = frobenius_power_trace(out.ap, inst.p, inst.r);

  auto phi = [&](const Rational& x) { return Fq.quad_char(reduce_rational(x, Fq)); };
  const Rational a = inst.param;
  FqElem argument;
  int prefactor = 1;
  i64 correction = 0;
  switch (inst.theorem) {
    case Theorem::T18:
      argument = reduce_rational(a * a, Fq);
      prefactor = phi(-1);
      break;
    case Theorem::T19: argument = reduce_rational(Rational(81, 64), Fq); break;
    case Theorem::T110:
      argument = reduce_rational(Rational(16, 9), Fq);
      prefactor = phi(a);
      break;
    default:
      argument = reduce_rational(Rational(1, 4), Fq);
      prefactor = phi(a);
      correction = -phi(Rational(6) * a) - phi(Rational(-6) * a);
      break;
  }
  out.g_value = evaluate_integer(shape_of(inst.theorem), argument, evaluator_for(Fq));
  out.predicted = prefactor * out.g_value + correction + parity_term(inst.p, inst.r);
  return out;
}

std::vector<CorollaryItem> corollary_values() {
  const FqField F1331 = FqField::build(11, 3);
  const FqField F125 = FqField::build(5, 3);
  const GEvaluator e1331 = evaluator_for(F1331);
  const GEvaluator e125 = evaluator_for(F125);
  auto phi = [](const FqField& F, i64 x) { return F.quad_char(F.from_int(x)); };

  std::vector<CorollaryItem> out;
  {
    const PairResult r = trace_sum_pair(PairInstance{Theorem::T13, F1331.from_int(2), {}}, e1331);
    out.push_back({1, 1331, r.g_value, -24 * phi(F1331, -1), r.prefactor * r.lhs});
  }
  {
    const FqElem a1 = F1331.from_int(2);
    const FqElem a3 = F1331.neg(F1331.from_rational(Rational(8, 24)));
    const PairResult r = trace_sum_pair(PairInstance{Theorem::T14, a1, a3}, e1331);
    out.push_back({2, 1331, r.g_value, -39, r.lhs});
  }
  {
    const PairResult r = trace_sum_pair(PairInstance{Theorem::T15, F125.from_int(3), F125.from_int(-3)}, e125);
    out.push_back({3, 125, r.g_value, 12 * phi(F125, 3), r.prefactor * r.lhs});
  }
  {
    const PairResult r = trace_sum_pair(PairInstance{Theorem::T16, F1331.from_int(3), F1331.from_int(2)}, e1331);
    const i64 paper = -36 * phi(F1331, 3) + phi(F1331, 6) + phi(F1331, -6);
    out.push_back({4, 1331, r.g_value, paper, r.prefactor * (r.lhs - r.correction)});
  }
  return out;
}

std::pair<i64, i64> legendre_bridge(FqElem lambda, const GEvaluator& eval) {
  const FqField& F = eval.ctx().field();
  const i64 trace = trace_of_frobenius(Legendre{lambda}, F);
  const GShape shape{{q(1, 2), q(1, 2)}, {0, 0}};
  const i64 g = evaluate_integer(shape, F.inv(lambda), eval);
  return {trace, F.quad_char(F.from_int(-1)) * g};
}

}  // namespace padichg::frobtrace
