#include "padichg/padic.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

#include "padichg/error.hpp"

namespace padichg {

struct PadicCtx::GammaCache {
  std::vector<u64> table;  // empty when p^N exceeds the table limit
  std::mutex mutex;
  std::unordered_map<u64, u64> memo;
  // Above the table limit: unit-part products prod_{j < k*step, p !| j} j.
  std::once_flag checkpoints_once;
  std::vector<u64> checkpoints;
  u64 step = 0;
};

PadicInt PadicInt::inverse() const {
  const auto inv = invmod(value_, modulus_);
  require(inv.has_value(), Errc::NonUnitInverse, std::to_string(value_) + " is not a unit");
  return {*inv, modulus_};
}

u64 gamma_by_definition(u64 n, u64 p, u64 m) {
  u64 prod = 1 % m;
  for (u64 j = 1; j < n; ++j) {
    if (j % p != 0) prod = mulmod(prod, j % m, m);
  }
  return (n % 2 == 1) ? submod(0, prod, m) : prod;
}

u64 a0(const Rational& x, u64 p) {
  const u64 res = x.residue_mod(p);
  return res == 0 ? p : res;
}

PadicCtx::PadicCtx(const FqField& field, unsigned precision)
    : field_(field), precision_(precision), gamma_(std::make_shared<GammaCache>()) {
  require(precision >= 1, Errc::HypothesisViolation, "precision must be at least 1");
  const auto pN = checked_pow(field.p(), precision);
  require(pN.has_value() && *pN < (u64{1} << 62), Errc::Overflow, "p^N exceeds 62 bits");
  pN_ = *pN;
  lifted_.assign(field.modulus().begin(), field.modulus().end());

  if (pN_ <= kGammaTableLimit) {
    // Gamma_p(n+1) = -Gamma_p(n) * (n if p does not divide n, else 1).
    auto& table = gamma_->table;
    table.resize(pN_);
    table[0] = 1 % pN_;
    for (u64 n = 0; n + 1 < pN_; ++n) {
      const u64 factor = (n % field.p() == 0) ? 1 : n;
      table[n + 1] = submod(0, mulmod(table[n], factor, pN_), pN_);
    }
  }
}

PadicInt PadicCtx::from_rational(const Rational& x) const { return {x.residue_mod(pN_), pN_}; }

PadicInt PadicCtx::gamma_residue(u64 m) const {
  m %= pN_;
  if (!gamma_->table.empty()) return {gamma_->table[m], pN_};
  if (pN_ <= kCheckpointLimit) {
    GammaCache& g = *gamma_;
    std::call_once(g.checkpoints_once, [&] {
      g.step = 1;
      while (pN_ / g.step > kGammaTableLimit) g.step *= p();
      g.checkpoints.reserve(pN_ / g.step + 1);
      u64 prod = 1 % pN_;
      for (u64 j = 0; j < pN_; ++j) {
        if (j % g.step == 0) g.checkpoints.push_back(prod);
        if (j % p() != 0) prod = mulmod(prod, j, pN_);
      }
    });
    u64 prod = g.checkpoints[m / g.step];
    for (u64 j = m - m % g.step; j < m; ++j) {
      if (j % p() != 0) prod = mulmod(prod, j, pN_);
    }
    return {(m % 2 == 1) ? submod(0, prod, pN_) : prod, pN_};
  }
  {
    std::lock_guard lock(gamma_->mutex);
    if (const auto it = gamma_->memo.find(m); it != gamma_->memo.end()) return {it->second, pN_};
  }
  const u64 value = gamma_by_definition(m, p(), pN_);
  std::lock_guard lock(gamma_->mutex);
  gamma_->memo.emplace(m, value);
  return {value, pN_};
}

PadicInt PadicCtx::gamma_p(const Rational& x) const {
  require(reduce_signed(x.den(), p()) != 0, Errc::DenominatorDivisibleByP,
          "Gamma_p argument " + x.str() + " is not in Z_p");
  return gamma_residue(x.residue_mod(pN_));
}

GrElem PadicCtx::gr_constant(PadicInt c) const {
  GrElem out = gr_zero();
  out.coeffs[0] = c.value() % pN_;
  return out;
}

GrElem PadicCtx::gr_add(const GrElem& a, const GrElem& b) const {
  GrElem out = a;
  for (unsigned i = 0; i < r(); ++i) out.coeffs[i] = addmod(a.coeffs[i], b.coeffs[i], pN_);
  return out;
}

GrElem PadicCtx::gr_sub(const GrElem& a, const GrElem& b) const {
  GrElem out = a;
  for (unsigned i = 0; i < r(); ++i) out.coeffs[i] = submod(a.coeffs[i], b.coeffs[i], pN_);
  return out;
}

GrElem PadicCtx::gr_mul(const GrElem& a, const GrElem& b) const {
  const unsigned n = r();
  if (n == 1) return GrElem{{mulmod(a.coeffs[0], b.coeffs[0], pN_)}};
  std::vector<unsigned __int128> acc(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.coeffs[i]) * b.coeffs[j];
    }
  }
  std::vector<u64> prod(2 * n - 1);
  for (unsigned k = 0; k < prod.size(); ++k) prod[k] = static_cast<u64>(acc[k] % pN_);
  // x^n = -(f_0 + f_1 x + ... + f_{n-1} x^{n-1})
  for (unsigned k = 2 * n - 1; k-- > n;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      prod[k - n + j] = submod(prod[k - n + j], mulmod(c, lifted_[j], pN_), pN_);
    }
    prod[k] = 0;
  }
  prod.resize(n);
  return GrElem{std::move(prod)};
}

GrElem PadicCtx::gr_scale(const GrElem& a, PadicInt c) const {
  GrElem out = a;
  for (auto& x : out.coeffs) x = mulmod(x, c.value(), pN_);
  return out;
}

void PadicCtx::gr_axpy(GrElem& a, PadicInt c, const GrElem& b) const {
  for (unsigned i = 0; i < r(); ++i) a.coeffs[i] = addmod(a.coeffs[i], mulmod(c.value(), b.coeffs[i], pN_), pN_);
}

GrElem PadicCtx::gr_pow(const GrElem& base, i64 e) const {
  if (e < 0) return gr_pow(gr_inverse(base), -e);
  GrElem result = gr_one();
  GrElem b = base;
  u64 k = static_cast<u64>(e);
  while (k > 0) {
    if (k & 1) result = gr_mul(result, b);
    k >>= 1;
    if (k > 0) b = gr_mul(b, b);
  }
  return result;
}

bool PadicCtx::gr_is_unit(const GrElem& a) const { return !reduce(a).is_zero(); }

GrElem PadicCtx::gr_inverse(const GrElem& u) const {
  require(gr_is_unit(u), Errc::NonUnitInverse, "Galois-ring element is divisible by p");
  // u^{q-2} inverts u modulo p; each Newton step doubles the p-adic accuracy.
  GrElem v = gr_pow(u, static_cast<i64>(q() - 2));
  const GrElem two = gr_constant(make(2));
  for (unsigned acc = 1; acc < precision_; acc *= 2) v = gr_mul(v, gr_sub(two, gr_mul(u, v)));
  require(gr_mul(u, v) == gr_one(), Errc::NonUnitInverse, "Newton inversion did not converge");
  return v;
}

bool PadicCtx::gr_is_constant(const GrElem& a) const {
  for (unsigned i = 1; i < r(); ++i) {
    if (a.coeffs[i] != 0) return false;
  }
  return true;
}

GrElem PadicCtx::lift(FqElem x) const {
  const auto c = field_.coeffs(x);
  return GrElem{std::vector<u64>(c.begin(), c.end())};
}

FqElem PadicCtx::reduce(const GrElem& a) const {
  std::vector<u64> c(a.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] % p();
  return field_.from_coeffs(c);
}

GrElem PadicCtx::teichmuller(FqElem t) const {
  require(!t.is_zero(), Errc::ZeroInput, "Teichmuller lift of zero");
  // z -> z^q gains at least one p-adic digit per step.
  GrElem z = lift(t);
  for (unsigned i = 0; i < precision_; ++i) z = gr_pow(z, static_cast<i64>(q()));
  if (gr_pow(z, static_cast<i64>(q() - 1)) != gr_one()) {
    throw std::logic_error("Teichmuller iteration did not reach a (q-1)-th root of unity");
  }
  return z;
}

TeichmullerTable::TeichmullerTable(const PadicCtx& ctx) : field_(ctx.field()) {
  const u64 order = ctx.q() - 1;
  powers_.reserve(order);
  const GrElem w = ctx.teichmuller(field_.generator());
  GrElem cur = ctx.gr_one();
  for (u64 k = 0; k < order; ++k) {
    powers_.push_back(cur);
    cur = ctx.gr_mul(cur, w);
  }
  if (cur != ctx.gr_one()) throw std::logic_error("omega(g) does not have order dividing q - 1");
}

const GrElem& TeichmullerTable::omega(FqElem t) const { return powers_[field_.log(t)]; }

const GrElem& TeichmullerTable::omega_bar_pow(FqElem t, i64 a) const {
  const u64 order = powers_.size();
  const u64 k = mulmod(field_.log(t), reduce_signed(-a, order), order);
  return powers_[k];
}

}  // namespace padichg
