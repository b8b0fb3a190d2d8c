#include "padichg/ffield.hpp"

#include <algorithm>
#include <string>

#include "padichg/error.hpp"

namespace padichg {
namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic g over F_p.
Poly poly_mod(Poly a, std::span<const u64> g, u64 p) {
  const std::size_t dg = g.size() - 1;
  trim(a);
  while (a.size() > dg) {
    const u64 lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t k = 0; k <= dg; ++k) {
      a[shift + k] = submod(a[shift + k], mulmod(lead, g[k], p), p);
    }
    trim(a);
  }
  return a;
}

/// Product of two residues modulo the monic modulus f, each of length r.
Poly mul_reduce(const Poly& a, const Poly& b, std::span<const u64> f, u64 p) {
  const std::size_t r = f.size() - 1;
  Poly prod(2 * r - 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > r;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < r; ++j) prod[k - r + j] = submod(prod[k - r + j], mulmod(c, f[j], p), p);
    prod[k] = 0;
  }
  prod.resize(r);
  return prod;
}

Poly digits(u64 code, u64 p, unsigned r) {
  Poly out(r, 0);
  for (unsigned i = 0; i < r; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

u64 encode(const Poly& coeffs, u64 p) {
  u64 code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p + coeffs[i];
  return code;
}

Poly poly_pow(Poly base, u64 e, std::span<const u64> f, u64 p) {
  Poly result(f.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mul_reduce(result, base, f, p);
    base = mul_reduce(base, base, f, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

PrimePower PrimePower::make(u64 p, unsigned r) {
  require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  require(p != 2, Errc::HypothesisViolation, "p must be odd");
  require(r >= 1, Errc::HypothesisViolation, "r must be positive");
  const auto q = checked_pow(p, r);
  require(q.has_value() && *q < (u64{1} << 62), Errc::Overflow, "p^r exceeds 62 bits");
  return PrimePower{p, r, *q};
}

namespace poly {

bool is_irreducible(std::span<const u64> f, u64 p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const u64 count = *checked_pow(p, static_cast<unsigned>(d));
    for (u64 idx = 0; idx < count; ++idx) {
      Poly g = digits(idx, p, static_cast<unsigned>(d));
      g.push_back(1);
      if (poly_mod(Poly(f.begin(), f.end()), g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<u64> smallest_irreducible(u64 p, unsigned r) {
  const u64 count = *checked_pow(p, r);
  for (u64 idx = 0; idx < count; ++idx) {
    // The constant term is the most significant digit of the enumeration,
    // which realizes the low-to-high lexicographic order.
    Poly f(r + 1, 0);
    u64 rest = idx;
    for (unsigned j = 0; j < r; ++j) {
      f[r - 1 - j] = rest % p;
      rest /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(Errc::HypothesisViolation, "no irreducible polynomial found");
}

}  // namespace poly

FqField FqField::build(u64 p, unsigned r, u64 cap) {
  const PrimePower ctx = PrimePower::make(p, r);
  require(ctx.q <= cap, Errc::DegreeTooLarge,
          "field of " + std::to_string(ctx.q) + " elements exceeds the table cap " + std::to_string(cap));

  auto tables = std::make_shared<Tables>();
  tables->ctx = ctx;
  tables->modulus = poly::smallest_irreducible(p, r);
  const std::span<const u64> f = tables->modulus;
  const u64 order = ctx.q - 1;
  const auto factors = prime_factors(order);

  u64 gen_code = 0;
  for (u64 code = 1; code < ctx.q; ++code) {
    const Poly g = digits(code, p, r);
    bool primitive = true;
    for (const u64 ell : factors) {
      const Poly h = poly_pow(g, order / ell, f, p);
      if (encode(h, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (order == 1 || primitive) {
      gen_code = code;
      break;
    }
  }
  require(gen_code != 0, Errc::HypothesisViolation, "no generator found");
  tables->generator = FqElem(static_cast<std::uint32_t>(gen_code));

  tables->exp.resize(order);
  tables->log.assign(ctx.q, 0);
  const Poly g = digits(gen_code, p, r);
  Poly cur = digits(1, p, r);
  for (u64 k = 0; k < order; ++k) {
    const u64 code = encode(cur, p);
    tables->exp[k] = static_cast<std::uint32_t>(code);
    tables->log[code] = static_cast<std::uint32_t>(k);
    cur = mul_reduce(cur, g, f, p);
  }
  require(encode(cur, p) == 1, Errc::HypothesisViolation, "generator order mismatch");
  return FqField(std::move(tables));
}

FqElem FqField::from_int(i64 value) const { return FqElem(static_cast<std::uint32_t>(reduce_signed(value, p()))); }

FqElem FqField::from_rational(const Rational& value) const {
  require(reduce_signed(value.den(), p()) != 0, Errc::DenominatorDivisibleByP,
          value.str() + " has a denominator divisible by " + std::to_string(p()));
  return FqElem(static_cast<std::uint32_t>(value.residue_mod(p())));
}

FqElem FqField::from_code(u64 code) const {
  if (code >= q()) throw std::out_of_range("field element code " + std::to_string(code) + " is not below q");
  return FqElem(static_cast<std::uint32_t>(code));
}

FqElem FqField::from_coeffs(std::span<const u64> coeffs) const {
  Poly c(r(), 0);
  for (std::size_t i = 0; i < coeffs.size() && i < r(); ++i) c[i] = coeffs[i] % p();
  return FqElem(static_cast<std::uint32_t>(encode(c, p())));
}

std::vector<u64> FqField::coeffs(FqElem x) const { return digits(x.code(), p(), r()); }

FqElem FqField::add(FqElem a, FqElem b) const {
  const u64 pp = p();
  if (r() == 1) return FqElem(static_cast<std::uint32_t>((a.code() + b.code()) % pp));
  u64 x = a.code(), y = b.code(), out = 0, place = 1;
  for (unsigned i = 0; i < r(); ++i) {
    out += ((x % pp + y % pp) % pp) * place;
    x /= pp;
    y /= pp;
    place *= pp;
  }
  return FqElem(static_cast<std::uint32_t>(out));
}

FqElem FqField::neg(FqElem a) const {
  const u64 pp = p();
  u64 x = a.code(), out = 0, place = 1;
  for (unsigned i = 0; i < r(); ++i) {
    out += ((pp - x % pp) % pp) * place;
    x /= pp;
    place *= pp;
  }
  return FqElem(static_cast<std::uint32_t>(out));
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqField::mul(FqElem a, FqElem b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  const auto& t = *tables_;
  const u64 order = q() - 1;
  u64 k = static_cast<u64>(t.log[a.code()]) + t.log[b.code()];
  if (k >= order) k -= order;
  return FqElem(t.exp[k]);
}

FqElem FqField::inv(FqElem a) const {
  require(!a.is_zero(), Errc::ZeroInput, "inverse of zero");
  const u64 order = q() - 1;
  const u64 k = tables_->log[a.code()];
  return FqElem(tables_->exp[k == 0 ? 0 : order - k]);
}

FqElem FqField::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem FqField::pow(FqElem a, i64 e) const {
  if (e == 0) return one();
  if (a.is_zero()) {
    require(e > 0, Errc::ZeroInput, "negative power of zero");
    return zero();
  }
  const u64 order = q() - 1;
  const u64 k = mulmod(tables_->log[a.code()], reduce_signed(e, order), order);
  return FqElem(tables_->exp[k]);
}

u64 FqField::log(FqElem x) const {
  require(!x.is_zero(), Errc::ZeroInput, "discrete log of zero");
  return tables_->log[x.code()];
}

FqElem FqField::exp(u64 k) const { return FqElem(tables_->exp[k % (q() - 1)]); }

int FqField::quad_char(FqElem x) const {
  if (x.is_zero()) return 0;
  return (tables_->log[x.code()] % 2 == 0) ? 1 : -1;
}

u64 FqField::trace(FqElem x) const {
  FqElem acc = zero();
  FqElem power = x;
  for (unsigned i = 0; i < r(); ++i) {
    acc = add(acc, power);
    power = pow(power, static_cast<i64>(p()));
  }
  if (acc.code() >= p()) fail(Errc::HypothesisViolation, "trace left the prime field");
  return acc.code();
}

}  // namespace padichg
