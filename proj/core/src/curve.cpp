#include "padichg/curve.hpp"

#include "padichg/error.hpp"

namespace padichg {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_family(const CurveSpec& curve, const FqField& field) {
  const FqElem minus_one = field.from_int(-1);
  std::visit(overloaded{
                 [&](const Legendre& c) {
                   require(c.lambda != minus_one, Errc::HypothesisViolation, "Legendre family needs lambda != -1");
                 },
                 [&](const A1A3& c) {
                   require(field.p() > 3, Errc::HypothesisViolation, "a1/a3 family needs p > 3");
                   require(!c.a1.is_zero() && !c.a3.is_zero(), Errc::HypothesisViolation,
                           "a1/a3 family needs a1, a3 nonzero");
                 },
                 [&](const FG& c) {
                   require(!c.f.is_zero() && !c.g.is_zero(), Errc::HypothesisViolation,
                           "f/g family needs f, g nonzero");
                 },
                 [&](const CD& c) {
                   require(field.p() > 3, Errc::HypothesisViolation, "c/d family needs p > 3");
                   require(!c.c.is_zero() && !c.d.is_zero(), Errc::HypothesisViolation,
                           "c/d family needs c, d nonzero");
                 },
                 [](const Weierstrass&) {},
             },
             curve);
}

}  // namespace

std::string family_name(const CurveSpec& curve) {
  return std::visit(overloaded{
                        [](const Legendre&) { return std::string("legendre"); },
                        [](const A1A3&) { return std::string("a1a3"); },
                        [](const FG&) { return std::string("fg"); },
                        [](const CD&) { return std::string("cd"); },
                        [](const Weierstrass&) { return std::string("weierstrass"); },
                    },
                    curve);
}

Weierstrass to_weierstrass(const CurveSpec& curve, const FqField& field) {
  const FqElem zero = field.zero();
  return std::visit(overloaded{
                        [&](const Legendre& c) {
                          // x(x-1)(x-l) = x^3 - (1+l) x^2 + l x
                          return Weierstrass{zero, field.neg(field.add(field.one(), c.lambda)), zero, c.lambda, zero};
                        },
                        [&](const A1A3& c) { return Weierstrass{c.a1, zero, c.a3, zero, zero}; },
                        [&](const FG& c) { return Weierstrass{zero, c.f, zero, c.g, zero}; },
                        [&](const CD& c) { return Weierstrass{zero, c.c, zero, zero, c.d}; },
                        [](const Weierstrass& w) { return w; },
                    },
                    curve);
}

FqElem discriminant(const Weierstrass& w, const FqField& F) {
  auto k = [&](i64 v) { return F.from_int(v); };
  const FqElem b2 = F.add(F.square(w.a1), F.mul(k(4), w.a2));
  const FqElem b4 = F.add(F.mul(k(2), w.a4), F.mul(w.a1, w.a3));
  const FqElem b6 = F.add(F.square(w.a3), F.mul(k(4), w.a6));
  FqElem b8 = F.mul(F.square(w.a1), w.a6);
  b8 = F.add(b8, F.mul(k(4), F.mul(w.a2, w.a6)));
  b8 = F.sub(b8, F.mul(w.a1, F.mul(w.a3, w.a4)));
  b8 = F.add(b8, F.mul(w.a2, F.square(w.a3)));
  b8 = F.sub(b8, F.square(w.a4));

  FqElem delta = F.neg(F.mul(F.square(b2), b8));
  delta = F.sub(delta, F.mul(k(8), F.pow(b4, 3)));
  delta = F.sub(delta, F.mul(k(27), F.square(b6)));
  delta = F.add(delta, F.mul(k(9), F.mul(b2, F.mul(b4, b6))));
  return delta;
}

void validate(const CurveSpec& curve, const FqField& field) {
  check_family(curve, field);
  require(!discriminant(to_weierstrass(curve, field), field).is_zero(), Errc::SingularCurve,
          family_name(curve) + " curve has zero discriminant over F_" + std::to_string(field.q()));
}

u64 count_points(const CurveSpec& curve, const FqField& F) {
  validate(curve, F);
  const Weierstrass w = to_weierstrass(curve, F);
  // (y + (a1 x + a3)/2)^2 = x^3 + a2 x^2 + a4 x + a6 + (a1 x + a3)^2 / 4
  const FqElem quarter = F.inv(F.from_int(4));
  const bool has_linear_y = !w.a1.is_zero() || !w.a3.is_zero();
  i64 total = static_cast<i64>(F.q()) + 1;
  for (u64 code = 0; code < F.q(); ++code) {
    const FqElem x = F.from_code(code);
    FqElem rhs = F.add(F.mul(F.add(F.mul(F.add(x, w.a2), x), w.a4), x), w.a6);
    if (has_linear_y) rhs = F.add(rhs, F.mul(quarter, F.square(F.add(F.mul(w.a1, x), w.a3))));
    total += F.quad_char(rhs);
  }
  return static_cast<u64>(total);
}

u64 count_points_exhaustive(const CurveSpec& curve, const FqField& F) {
  validate(curve, F);
  const Weierstrass w = to_weierstrass(curve, F);
  u64 count = 1;
  for (u64 xc = 0; xc < F.q(); ++xc) {
    const FqElem x = F.from_code(xc);
    const FqElem x2 = F.square(x);
    FqElem rhs = F.mul(x2, x);
    rhs = F.add(rhs, F.mul(w.a2, x2));
    rhs = F.add(rhs, F.mul(w.a4, x));
    rhs = F.add(rhs, w.a6);
    const FqElem lin = F.add(F.mul(w.a1, x), w.a3);
    for (u64 yc = 0; yc < F.q(); ++yc) {
      const FqElem y = F.from_code(yc);
      const FqElem lhs = F.add(F.square(y), F.mul(lin, y));
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

i64 trace_of_frobenius(const CurveSpec& curve, const FqField& field) {
  const i64 trace = static_cast<i64>(field.q()) + 1 - static_cast<i64>(count_points(curve, field));
  if (!within_hasse_bound(trace, field.q())) {
    throw std::logic_error("trace " + std::to_string(trace) + " violates the Hasse bound");
  }
  return trace;
}

bool within_hasse_bound(i64 trace, u64 q) {
  return static_cast<unsigned __int128>(static_cast<__int128>(trace) * trace) <= static_cast<unsigned __int128>(4) * q;
}

}  // namespace padichg
