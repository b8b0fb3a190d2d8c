#pragma once

#include <string>
#include <variant>

#include "padichg/ffield.hpp"

namespace padichg {

/// y^2 = x(x-1)(x-lambda)
struct Legendre {
  FqElem lambda;
};

/// y^2 + a1*x*y + a3*y = x^3
struct A1A3 {
  FqElem a1, a3;
};

/// y^2 = x^3 + f*x^2 + g*x
struct FG {
  FqElem f, g;
};

/// y^2 = x^3 + c*x^2 + d
struct CD {
  FqElem c, d;
};

/// y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6
struct Weierstrass {
  FqElem a1, a2, a3, a4, a6;
};

using CurveSpec = std::variant<Legendre, A1A3, FG, CD, Weierstrass>;

std::string family_name(const CurveSpec& curve);

Weierstrass to_weierstrass(const CurveSpec& curve, const FqField& field);

/// Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
FqElem discriminant(const Weierstrass& w, const FqField& field);

/// Family restrictions (HypothesisViolation) then nonsingularity
/// (SingularCurve).
void validate(const CurveSpec& curve, const FqField& field);

/// #E(F_q) including the point at infinity, via the quadratic-character sum
/// after completing the square.
u64 count_points(const CurveSpec& curve, const FqField& field);

/// #E(F_q) by enumerating every (x, y) pair. O(q^2); meant for small fields.
u64 count_points_exhaustive(const CurveSpec& curve, const FqField& field);

/// a_q(E) = q + 1 - #E(F_q).
i64 trace_of_frobenius(const CurveSpec& curve, const FqField& field);

/// a^2 <= 4q.
bool within_hasse_bound(i64 trace, u64 q);

}  // namespace padichg
