#include "padichg/gfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "padichg/error.hpp"

namespace padichg {
namespace {

u64 pow_u64(u64 p, unsigned e) { return *checked_pow(p, e); }

/// p^shift * value, reduced to modulus p^target.
u64 rescale(const PadicInt& value, u64 p, unsigned shift, u64 target_modulus) {
  u64 v = value.value() % target_modulus;
  for (unsigned s = 0; s < shift; ++s) v = mulmod(v, p, target_modulus);
  return v;
}

unsigned precision_of(u64 modulus, u64 p) {
  unsigned n = 0;
  while (modulus > 1) {
    modulus /= p;
    ++n;
  }
  return n;
}

void validate_params(const GParams& params, u64 p) {
  require(!params.top.empty() && params.top.size() == params.bottom.size(), Errc::HypothesisViolation,
          "parameter rows must be nonempty and of equal length");
  require(!params.t.is_zero(), Errc::ZeroArgument, "nGn is evaluated only at nonzero arguments");
  for (const auto* row : {&params.top, &params.bottom}) {
    for (const Rational& x : *row) {
      require(reduce_signed(x.den(), p) != 0, Errc::DenominatorDivisibleByP,
              "parameter " + x.str() + " is not in Z_p");
    }
  }
}

/// Per-(k, i) data that does not depend on the summation index.
struct Row {
  std::vector<Rational> top_frac;     // <a_k p^i>
  std::vector<Rational> bottom_frac;  // <-b_k p^i>
};

Row fractional_rows(const GParams& params, u64 p, unsigned r) {
  Row row;
  for (unsigned i = 0; i < r; ++i) {
    const Rational pi(static_cast<i64>(pow_u64(p, i)));
    for (std::size_t k = 0; k < params.top.size(); ++k) {
      row.top_frac.push_back((params.top[k] * pi).frac());
      row.bottom_frac.push_back((-params.bottom[k] * pi).frac());
    }
  }
  return row;
}

/// Exponent of (-p) in each summand:
/// sum_{k,i} -floor(<a_k p^i> - a p^i/(q-1)) - floor(<-b_k p^i> + a p^i/(q-1)).
std::vector<i64> summand_exponents(const Row& row, std::size_t n, u64 p, unsigned r, u64 q) {
  std::vector<i64> exps(q - 1, 0);
  const i64 q1 = static_cast<i64>(q - 1);
  for (u64 a = 0; a + 1 < q; ++a) {
    i64 e = 0;
    for (unsigned i = 0; i < r; ++i) {
      const Rational shift(static_cast<i64>(a) * static_cast<i64>(pow_u64(p, i)), q1);
      for (std::size_t k = 0; k < n; ++k) {
        e -= (row.top_frac[i * n + k] - shift).floor();
        e -= (row.bottom_frac[i * n + k] + shift).floor();
      }
    }
    exps[a] = e;
  }
  return exps;
}


u64 smallest_prime_factor(u64 m) {
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) return d;
  }
  return m;
}

GRingValue to_ring(const GValue& v) {
  return {GrElem{{v.padic.value()}}, v.denominator_exponent, v.precision, smallest_prime_factor(v.padic.modulus())};
}

GValue from_ring(const GRingValue& v) {
  GValue out;
  out.padic = PadicInt(v.coords.coeffs[0], pow_u64(v.p, v.precision));
  out.denominator_exponent = v.denominator_exponent;
  out.precision = v.precision;
  return out;
}

/// Both values brought to the common denominator p^k and modulus p^N.
std::pair<std::vector<u64>, std::vector<u64>> align(const GRingValue& x, const GRingValue& y, unsigned& k, u64& modulus) {
  if (x.p != y.p || x.coords.coeffs.size() != y.coords.coeffs.size()) {
    fail(Errc::ContextMismatch, "values from different rings");
  }
  modulus = pow_u64(x.p, std::min(x.precision, y.precision));
  k = std::max(x.denominator_exponent, y.denominator_exponent);
  auto lift = [&](const GRingValue& v) {
    std::vector<u64> out;
    for (u64 c : v.coords.coeffs) out.push_back(rescale(PadicInt(c, pow_u64(v.p, v.precision)), v.p, k - v.denominator_exponent, modulus));
    return out;
  };
  return {lift(x), lift(y)};
}

}  // namespace

bool GRingValue::is_constant() const {
  return std::all_of(coords.coeffs.begin() + 1, coords.coeffs.end(), [](u64 c) { return c == 0; });
}

bool same_value(const GRingValue& x, const GRingValue& y) {
  unsigned k = 0;
  u64 modulus = 1;
  const auto [a, b] = align(x, y, k, modulus);
  return a == b;
}

GRingValue add(const GRingValue& x, const GRingValue& y) {
  unsigned k = 0;
  u64 modulus = 1;
  auto [a, b] = align(x, y, k, modulus);
  unsigned precision = precision_of(modulus, x.p);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = addmod(a[i], b[i], modulus);
  // Cancel common factors of p against the denominator; each one costs a digit.
  auto divisible = [&] { return std::all_of(a.begin(), a.end(), [&](u64 c) { return c % x.p == 0; }); };
  while (k > 0 && precision > 0 && divisible()) {
    for (auto& c : a) c /= x.p;
    --precision;
    --k;
  }
  return {GrElem{std::move(a)}, k, precision, x.p};
}

bool same_value(const GValue& x, const GValue& y) { return same_value(to_ring(x), to_ring(y)); }

GValue add(const GValue& x, const GValue& y) { return from_ring(add(to_ring(x), to_ring(y))); }

/// A working precision with its Teichmuller table.
struct GEvaluator::Level {
  PadicCtx ctx;
  TeichmullerTable omega;
  explicit Level(const PadicCtx& c) : ctx(c), omega(c) {}
};

struct GEvaluator::WideCache {
  std::mutex mutex;
  std::map<unsigned, std::shared_ptr<const Level>> levels;
};

GEvaluator::GEvaluator(const PadicCtx& ctx)
    : ctx_(ctx), omega_(std::make_shared<TeichmullerTable>(ctx)), wide_(std::make_shared<WideCache>()) {}

std::shared_ptr<const GEvaluator::Level> GEvaluator::level(unsigned extra) const {
  std::lock_guard lock(wide_->mutex);
  auto& slot = wide_->levels[extra];
  if (!slot) slot = std::make_shared<const Level>(PadicCtx(ctx_.field(), ctx_.precision() + extra));
  return slot;
}

GValue GEvaluator::evaluate(const GParams& params) const {
  const GRingValue v = evaluate_ring(params);
  require(v.is_constant(), Errc::NonConstantResult,
          "nGn accumulator has nonzero non-constant coordinates in GR(p^N, r)");
  return from_ring(v);
}

GRingValue GEvaluator::evaluate_ring(const GParams& params) const {
  validate_params(params, ctx_.p());
  const u64 p = ctx_.p(), q = ctx_.q();
  const unsigned r = ctx_.r(), target = ctx_.precision();
  const std::size_t n = params.top.size();
  const Row row = fractional_rows(params, p, r);
  const std::vector<i64> exps = summand_exponents(row, n, p, r, q);
  const i64 e_min = *std::min_element(exps.begin(), exps.end());

  // Negative exponents are absorbed by working `shift` extra digits and
  // dividing by p^shift at the end.
  const unsigned shift = e_min < 0 ? static_cast<unsigned>(-e_min) : 0;
  std::shared_ptr<const Level> wide;
  if (shift > 0) wide = level(shift);
  const PadicCtx& ctx = shift > 0 ? wide->ctx : ctx_;
  const TeichmullerTable& omega = shift > 0 ? wide->omega : *omega_;
  const unsigned work = ctx.precision();

  PadicInt denominator = ctx.make(1);
  for (std::size_t idx = 0; idx < row.top_frac.size(); ++idx) {
    denominator = denominator * ctx.gamma_p(row.top_frac[idx]) * ctx.gamma_p(row.bottom_frac[idx]);
  }
  const PadicInt denominator_inv = denominator.inverse();

  std::vector<PadicInt> minus_p_powers(work, ctx.make(1));
  for (unsigned e = 1; e < work; ++e) minus_p_powers[e] = minus_p_powers[e - 1] * ctx.make(-static_cast<i64>(p));

  const i64 q1 = static_cast<i64>(q - 1);
  GrElem acc = ctx.gr_zero();
  for (u64 a = 0; a + 1 < q; ++a) {
    const i64 e = exps[a] + static_cast<i64>(shift);
    if (e >= static_cast<i64>(work)) continue;
    PadicInt term = minus_p_powers[static_cast<std::size_t>(e)] * denominator_inv;
    if ((a * n) % 2 == 1) term = -term;
    for (unsigned i = 0; i < r; ++i) {
      const Rational s(static_cast<i64>(a) * static_cast<i64>(pow_u64(p, i)), q1);
      for (std::size_t k = 0; k < n; ++k) {
        // <(a_k - a/(q-1)) p^i> = <<a_k p^i> - a p^i/(q-1)>, likewise for b_k.
        term = term * ctx.gamma_p((row.top_frac[i * n + k] - s).frac());
        term = term * ctx.gamma_p((row.bottom_frac[i * n + k] + s).frac());
      }
    }
    ctx.gr_axpy(acc, term, omega.omega_bar_pow(params.t, static_cast<i64>(a)));
  }
  acc = ctx.gr_scale(acc, -ctx.make(static_cast<i64>(q - 1)).inverse());

  // Strip the common power of p (at most `shift`) left over from the shift.
  unsigned v = 0;
  auto divisible = [&] { return std::all_of(acc.coeffs.begin(), acc.coeffs.end(), [&](u64 c) { return c % p == 0; }); };
  while (v < shift && divisible()) {
    for (auto& c : acc.coeffs) c /= p;
    ++v;
  }
  const u64 target_modulus = pow_u64(p, target);
  for (auto& c : acc.coeffs) c %= target_modulus;
  return {std::move(acc), shift - v, target, p};
}

GValue evaluate_G(const GParams& params, const FqField& field, const PadicCtx& ctx) {
  require(field.ctx() == ctx.field().ctx() && std::equal(field.modulus().begin(), field.modulus().end(),
                                                         ctx.field().modulus().begin(), ctx.field().modulus().end()),
          Errc::ContextMismatch, "field and p-adic context disagree");
  return GEvaluator(ctx).evaluate(params);
}

i64 reconstruct_integer(const GValue& v, u64 p, u64 bound) {
  const u64 modulus = v.padic.modulus();
  require(modulus / 2 >= bound + (modulus % 2 == 0 ? 1 : 0) && modulus > 2 * bound, Errc::PrecisionUnderflow,
          "p^N = " + std::to_string(modulus) + " does not exceed 2*" + std::to_string(bound));
  require(v.integral(), Errc::NoRepresentative,
          "value has p-adic valuation -" + std::to_string(v.denominator_exponent));
  const i64 m = v.padic.symmetric();
  const i64 b = static_cast<i64>(bound);
  require(m >= -b && m <= b, Errc::NoRepresentative,
          "residue " + std::to_string(v.padic.value()) + " has no representative within " + std::to_string(bound));
  (void)p;
  return m;
}

unsigned choose_precision(u64 p, u64 bound) {
  unsigned n = 1;
  unsigned __int128 pN = p;
  while (pN <= static_cast<unsigned __int128>(2) * bound) {
    pN *= p;
    ++n;
  }
  return n;
}

u64 default_trace_bound(u64 q) { return isqrt(16 * q) + 4; }

bool check_splitting_identity(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, FqElem x,
                              const GEvaluator& eval) {
  const PadicCtx& ctx = eval.ctx();
  const FqField& F = ctx.field();
  i64 d = 1;
  for (const Rational& a : {a1, a2, a3, a4}) {
    require(reduce_signed(a.den(), ctx.p()) != 0, Errc::HypothesisViolation, "p divides a parameter denominator");
    d = std::lcm(d, a.den());
  }
  require((ctx.q() - 1) % static_cast<u64>(d) == 0, Errc::HypothesisViolation,
          "q is not 1 mod lcm of the denominators (" + std::to_string(d) + ")");
  require(!x.is_zero(), Errc::HypothesisViolation, "x must be nonzero");

  const Rational half(1, 2), one(1);
  const std::vector<Rational> top2{a1, a2}, bottom2{a3, a4};
  const std::vector<Rational> top4{a1 * half, (one + a1) * half, a2 * half, (one + a2) * half};
  const std::vector<Rational> bottom4{a3 * half, (one + a3) * half, a4 * half, (one + a4) * half};

  const GRingValue plus = eval.evaluate_ring(GParams{top2, bottom2, x});
  const GRingValue minus = eval.evaluate_ring(GParams{top2, bottom2, F.neg(x)});
  const GRingValue split = eval.evaluate_ring(GParams{top4, bottom4, F.square(x)});
  return same_value(add(plus, minus), split);
}

bool check_reduction_identity(const std::vector<Rational>& top, const std::vector<Rational>& bottom, u64 d, FqElem t,
                              const GEvaluator& eval) {
  const PadicCtx& ctx = eval.ctx();
  require(ctx.r() == 1, Errc::HypothesisViolation, "reduction identity is stated over F_p");
  require(d >= 1 && (ctx.p() + 1) % d == 0, Errc::HypothesisViolation, "p must be -1 mod d");
  const i64 di = static_cast<i64>(d);
  std::vector<Rational> top_ext = top, bottom_ext = bottom;
  for (auto* row : {&top_ext, &bottom_ext}) {
    row->emplace_back(1, di);
    row->emplace_back(di - 1, di);
  }
  const GRingValue reduced = eval.evaluate_ring(GParams{top, bottom, t});
  const GRingValue extended = eval.evaluate_ring(GParams{top_ext, bottom_ext, t});
  return same_value(reduced, extended);
}

}  // namespace padichg
