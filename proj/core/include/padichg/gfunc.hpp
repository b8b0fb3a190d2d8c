#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "padichg/ffield.hpp"
#include "padichg/padic.hpp"
#include "padichg/rational.hpp"

namespace padichg {

/// Input to nGn: the parameter rows a_1..a_n (top) and b_1..b_n (bottom)
/// and the argument t in F_q^x.
struct GParams {
  std::vector<Rational> top;
  std::vector<Rational> bottom;
  FqElem t;
};

/// A value of nGn known modulo p^precision.
///
/// The value x lies in Q_p. When `denominator_exponent` is 0 it is a p-adic
/// integer and `padic` is x mod p^N; otherwise x has valuation
/// -denominator_exponent and `padic` holds p^k * x mod p^N.
struct GValue {
  PadicInt padic;
  unsigned denominator_exponent = 0;
  unsigned precision = 0;
  std::optional<i64> integer;

  bool integral() const noexcept { return denominator_exponent == 0; }
};

/// True iff both values agree to the common precision.
bool same_value(const GValue& x, const GValue& y);
/// x + y, at the smaller of the two precisions.
GValue add(const GValue& x, const GValue& y);

/// A value of nGn in the unramified extension Q_q: `coords` holds the
/// coordinates of p^k * x in GR(p^N, r), k = denominator_exponent. Parameter
/// lists that are not stable under multiplication by p give values outside
/// Q_p; identity checks compare those coordinate-wise.
struct GRingValue {
  GrElem coords;
  unsigned denominator_exponent = 0;
  unsigned precision = 0;
  u64 p = 0;

  bool is_constant() const;
};

bool same_value(const GRingValue& x, const GRingValue& y);
GRingValue add(const GRingValue& x, const GRingValue& y);

/// Evaluates nGn[a; b | t]_q as the finite sum over a in [0, q-2] with
/// exact floor bookkeeping for the powers of (-p), accumulated in
/// GR(p^N, r).
///
/// Summands whose (-p)-exponent is negative force a temporary increase of
/// the working precision so the result is still correct to p^N. The
/// accumulated element must be constant; anything else raises
/// NonConstantResult.
class GEvaluator {
 public:
  explicit GEvaluator(const PadicCtx& ctx);

  const PadicCtx& ctx() const noexcept { return ctx_; }
  /// The value in Q_p. Throws NonConstantResult when it is not.
  GValue evaluate(const GParams& params) const;
  /// The value in Q_q, without the Galois-stability requirement.
  GRingValue evaluate_ring(const GParams& params) const;

 private:
  struct Level;
  std::shared_ptr<const Level> level(unsigned extra) const;

  PadicCtx ctx_;
  std::shared_ptr<const TeichmullerTable> omega_;
  struct WideCache;
  std::shared_ptr<WideCache> wide_;
};

GValue evaluate_G(const GParams& params, const FqField& field, const PadicCtx& ctx);

/// The unique m with |m| <= bound and m = v (mod p^N).
/// PrecisionUnderflow when p^N <= 2*bound; NoRepresentative otherwise.
i64 reconstruct_integer(const GValue& v, u64 p, u64 bound);

/// Smallest N with p^N > 2*bound.
unsigned choose_precision(u64 p, u64 bound);

/// floor(4 sqrt(q)) + 4: bounds any sum of two Frobenius traces plus small
/// character corrections.
u64 default_trace_bound(u64 q);

/// 2G2[a1,a2; a3,a4 | x] + 2G2[a1,a2; a3,a4 | -x]
///   = 4G4[a1/2,(1+a1)/2,a2/2,(1+a2)/2; a3/2,(1+a3)/2,a4/2,(1+a4)/2 | x^2].
/// Requires p prime to every denominator, q = 1 mod their lcm, and x != 0.
bool check_splitting_identity(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4,
                              FqElem x, const GEvaluator& eval);

/// (n+2)G(n+2) with the pair (1/d, (d-1)/d) appended to both rows equals
/// nGn, over F_p with p = -1 (mod d).
bool check_reduction_identity(const std::vector<Rational>& top, const std::vector<Rational>& bottom, u64 d, FqElem t,
                              const GEvaluator& eval);

}  // namespace padichg
