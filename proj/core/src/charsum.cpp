#include "padichg/charsum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "padichg/error.hpp"

namespace padichg::charsum {
namespace {

std::vector<Complex> unit_roots(u64 n) {
  std::vector<Complex> out(n);
  for (u64 j = 0; j < n; ++j) out[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
  return out;
}

}  // namespace

CharTable::CharTable(const FqField& field) : field_(field) {
  require(field.q() <= kMaxComplexQ, Errc::FieldTooLarge,
          "complex oracle limited to q <= " + std::to_string(kMaxComplexQ));
  roots_ = unit_roots(field.q() - 1);
  zeta_ = unit_roots(field.p());
}

Complex CharTable::chi(i64 k, FqElem x) const {
  if (x.is_zero()) return 0.0;
  return roots_[mulmod(index(k), field_.log(x), q() - 1)];
}

Complex gauss_sum(i64 k, const CharTable& table) {
  Complex sum = 0.0;
  for (u64 c = 1; c < table.q(); ++c) {
    const FqElem x(static_cast<std::uint32_t>(c));
    sum += table.chi(k, x) * table.theta(x);
  }
  return sum;
}

Complex jacobi_sum_complex(i64 a, i64 b, const CharTable& table) {
  const FqField& F = table.field();
  Complex sum = 0.0;
  for (u64 c = 0; c < table.q(); ++c) {
    const FqElem x(static_cast<std::uint32_t>(c));
    sum += table.chi(a, x) * table.chi(b, F.sub(F.one(), x));
  }
  return sum;
}

Complex binomial(i64 a, i64 b, const CharTable& table) {
  const FqField& F = table.field();
  return table.chi(b, F.neg(F.one())) / static_cast<double>(table.q()) * jacobi_sum_complex(a, -b, table);
}

Complex greene_F(const std::vector<i64>& top, const std::vector<i64>& bottom, FqElem x, const CharTable& table) {
  require(!top.empty() && top.size() == bottom.size() + 1, Errc::HypothesisViolation,
          "Greene F needs n+1 top and n bottom characters");
  const u64 q = table.q();
  Complex sum = 0.0;
  for (u64 j = 0; j + 1 < q; ++j) {
    const i64 c = static_cast<i64>(j);
    Complex term = binomial(top[0] + c, c, table) * table.chi(c, x);
    for (std::size_t i = 0; i < bottom.size(); ++i) term *= binomial(top[i + 1] + c, bottom[i] + c, table);
    sum += term;
  }
  return static_cast<double>(q) / static_cast<double>(q - 1) * sum;
}

Complex mccarthy_Fstar(const std::vector<i64>& top, const std::vector<i64>& bottom, FqElem x,
                       const CharTable& table) {
  require(!top.empty() && top.size() == bottom.size() + 1, Errc::HypothesisViolation,
          "McCarthy F* needs n+1 top and n bottom characters");
  const FqField& F = table.field();
  const u64 q = table.q();
  const FqElem minus_one = F.neg(F.one());
  std::vector<Complex> g(q - 1);
  for (u64 k = 0; k + 1 < q; ++k) g[k] = gauss_sum(static_cast<i64>(k), table);
  auto G = [&](i64 k) { return g[table.index(k)]; };

  const i64 parity = static_cast<i64>(top.size());
  Complex sum = 0.0;
  for (u64 j = 0; j + 1 < q; ++j) {
    const i64 c = static_cast<i64>(j);
    Complex term = G(-c) * table.chi(c * parity, minus_one) * table.chi(c, x);
    for (i64 a : top) term *= G(a + c) / G(a);
    for (i64 b : bottom) term *= G(-(b + c)) / G(-b);
    sum += term;
  }
  return -sum / static_cast<double>(q - 1);
}

bool gauss_product_check(i64 k, const CharTable& table, double tol) {
  const FqField& F = table.field();
  const double q = static_cast<double>(table.q());
  const Complex lhs = gauss_sum(k, table) * gauss_sum(-k, table);
  Complex rhs = q * table.chi(k, F.neg(F.one()));
  if (table.index(k) == 0) rhs -= q - 1.0;
  return std::abs(lhs - rhs) <= tol;
}

bool davenport_hasse_check(u64 m, i64 psi_index, const CharTable& table, double tol) {
  const u64 q = table.q();
  require(m >= 1 && (q - 1) % m == 0, Errc::HypothesisViolation, "q must be 1 mod m");
  const FqField& F = table.field();
  const i64 step = static_cast<i64>((q - 1) / m);
  Complex lhs = 1.0, rhs_prod = 1.0;
  for (u64 j = 0; j < m; ++j) {
    const i64 chi = static_cast<i64>(j) * step;
    lhs *= gauss_sum(chi + psi_index, table);
    rhs_prod *= gauss_sum(chi, table);
  }
  const i64 mi = static_cast<i64>(m);
  const Complex rhs = -gauss_sum(mi * psi_index, table) * table.chi(-mi * psi_index, F.from_int(mi)) * rhs_prod;
  return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
}

Complex koike_trace(FqElem lambda, const CharTable& table) {
  const FqField& F = table.field();
  const i64 half = static_cast<i64>((table.q() - 1) / 2);
  const double phi_minus_one = static_cast<double>(F.quad_char(F.neg(F.one())));
  return -static_cast<double>(table.q()) * phi_minus_one * greene_F({half, half}, {0}, lambda, table);
}

GrElem jacobi_sum_padic(i64 a, i64 b, const PadicCtx& ctx, const TeichmullerTable& omega) {
  const FqField& F = ctx.field();
  GrElem sum = ctx.gr_zero();
  for (u64 c = 2; c < ctx.q(); ++c) {
    const FqElem x(static_cast<std::uint32_t>(c));
    const FqElem y = F.sub(F.one(), x);
    if (y.is_zero()) continue;
    sum = ctx.gr_add(sum, ctx.gr_mul(omega.omega_bar_pow(x, a), omega.omega_bar_pow(y, b)));
  }
  // c = 0 is x = 0 (character vanishes); c = 1 is x = 1 (1 - x = 0).
  return sum;
}

bool gross_koblitz_jacobi_check(i64 a, i64 b, const PadicCtx& ctx, const TeichmullerTable& omega) {
  const u64 q = ctx.q(), p = ctx.p();
  const u64 order = q - 1;
  require(reduce_signed(a, order) != 0 && reduce_signed(b, order) != 0 && reduce_signed(a + b, order) != 0,
          Errc::HypothesisViolation, "a, b and a+b must be nonzero mod q-1");
  const i64 qi = static_cast<i64>(order);
  Rational e_total(0);
  PadicInt gamma = ctx.make(1);
  for (unsigned i = 0; i < ctx.r(); ++i) {
    const i64 pi = static_cast<i64>(*checked_pow(p, i));
    const Rational fa = Rational(a * pi, qi).frac(), fb = Rational(b * pi, qi).frac();
    const Rational fab = Rational((a + b) * pi, qi).frac();
    e_total += fa + fb - fab;
    gamma = gamma * ctx.gamma_p(fa) * ctx.gamma_p(fb) * ctx.gamma_p(fab).inverse();
  }
  if (!e_total.is_integer() || e_total.num() < 0) throw std::logic_error("Gross-Koblitz exponent is not a natural number");
  PadicInt rhs = -gamma;
  for (i64 k = 0; k < e_total.num(); ++k) rhs = rhs * ctx.make(-static_cast<i64>(p));
  return jacobi_sum_padic(a, b, ctx, omega) == ctx.gr_constant(rhs);
}

}  // namespace padichg::charsum
