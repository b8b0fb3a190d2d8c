#include <gtest/gtest.h>

#include <cmath>

#include "padichg/arith.hpp"
#include "padichg/curve.hpp"
#include "padichg/error.hpp"
#include "padichg/ffield.hpp"

namespace padichg {
namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no MathError thrown";
  return Errc::Overflow;
}

TEST(FqField, SmallestGeneratorOfF5) {
  const FqField F = FqField::build(5, 1);
  EXPECT_EQ(F.generator().code(), 2u);
  EXPECT_EQ(F.q(), 5u);
}

TEST(FqField, GeneratorOfF1331HasFullOrder) {
  const FqField F = FqField::build(11, 3);
  EXPECT_EQ(F.q(), 1331u);
  EXPECT_EQ(F.pow(F.generator(), 1330), F.one());
  for (u64 d : prime_factors(1330)) EXPECT_NE(F.pow(F.generator(), static_cast<i64>(1330 / d)), F.one());
}

TEST(FqField, RejectsCompositeAndOversized) {
  EXPECT_EQ(error_of([] { FqField::build(4, 1); }), Errc::NotPrime);
  EXPECT_EQ(error_of([] { FqField::build(2, 3); }), Errc::HypothesisViolation);
  EXPECT_EQ(error_of([] { FqField::build(101, 4, 1'000'000); }), Errc::DegreeTooLarge);
}

TEST(FqField, ModulusIsIrreducible) {
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 2}, {5, 2}, {11, 3}, {3, 5}}) {
    const FqField F = FqField::build(p, r);
    // No roots is enough for r <= 3; the log table bijection covers the rest.
    if (r <= 3) {
      for (u64 x = 0; x < p; ++x) {
        u64 v = 0;
        for (std::size_t k = F.modulus().size(); k-- > 0;) v = (v * x + F.modulus()[k]) % p;
        EXPECT_NE(v, 0u) << "root " << x << " for p=" << p << " r=" << r;
      }
    }
    std::vector<bool> seen(F.q(), false);
    for (u64 k = 0; k + 1 < F.q(); ++k) {
      const FqElem x = F.exp(k);
      ASSERT_FALSE(seen[x.code()]);
      seen[x.code()] = true;
      EXPECT_EQ(F.log(x), k);
    }
  }
}

TEST(FqField, LogIsAHomomorphism) {
  const FqField F = FqField::build(7, 2);
  for (u64 a = 1; a < F.q(); a += 3) {
    for (u64 b = 1; b < F.q(); b += 5) {
      const FqElem x(static_cast<std::uint32_t>(a)), y(static_cast<std::uint32_t>(b));
      EXPECT_EQ(F.log(F.mul(x, y)), (F.log(x) + F.log(y)) % (F.q() - 1));
    }
  }
}

TEST(FqField, FieldAxiomsOnSamples) {
  const FqField F = FqField::build(3, 3);
  for (u64 a = 0; a < F.q(); ++a) {
    const FqElem x(static_cast<std::uint32_t>(a));
    EXPECT_EQ(F.add(x, F.neg(x)), F.zero());
    if (!x.is_zero()) EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
    for (u64 b = 0; b < F.q(); b += 4) {
      const FqElem y(static_cast<std::uint32_t>(b));
      EXPECT_EQ(F.mul(x, y), F.mul(y, x));
      EXPECT_EQ(F.mul(x, F.add(y, F.one())), F.add(F.mul(x, y), x));
    }
  }
}

TEST(FqField, RationalReduction) {
  const FqField F = FqField::build(11, 1);
  EXPECT_EQ(F.from_rational(Rational(81, 64)), F.div(F.from_int(81), F.from_int(64)));
  EXPECT_EQ(F.from_int(-1), F.neg(F.one()));
  EXPECT_EQ(error_of([&] { F.from_rational(Rational(1, 11)); }), Errc::DenominatorDivisibleByP);
}

TEST(QuadChar, Values) {
  const FqField F = FqField::build(11, 3);
  EXPECT_EQ(F.quad_char(F.zero()), 0);
  EXPECT_EQ(F.quad_char(F.one()), 1);
  EXPECT_EQ(F.quad_char(F.neg(F.one())), -1);
  const FqField F125 = FqField::build(5, 3);
  EXPECT_EQ(F125.quad_char(F125.from_int(3)), -1);
}

TEST(QuadChar, MultiplicativeAndEulerCriterion) {
  const FqField F = FqField::build(5, 2);
  for (u64 a = 1; a < F.q(); ++a) {
    const FqElem x(static_cast<std::uint32_t>(a));
    EXPECT_EQ(F.quad_char(F.square(x)), 1);
    const FqElem euler = F.pow(x, static_cast<i64>((F.q() - 1) / 2));
    EXPECT_EQ(euler, F.quad_char(x) == 1 ? F.one() : F.neg(F.one()));
    for (u64 b = 1; b < F.q(); b += 7) {
      const FqElem y(static_cast<std::uint32_t>(b));
      EXPECT_EQ(F.quad_char(F.mul(x, y)), F.quad_char(x) * F.quad_char(y));
    }
  }
}

TEST(FqField, TraceIsAdditiveAndLandsInFp) {
  const FqField F = FqField::build(3, 3);
  for (u64 a = 0; a < F.q(); ++a) {
    const FqElem x(static_cast<std::uint32_t>(a));
    EXPECT_LT(F.trace(x), 3u);
    for (u64 b = 0; b < F.q(); b += 5) {
      const FqElem y(static_cast<std::uint32_t>(b));
      EXPECT_EQ(F.trace(F.add(x, y)), (F.trace(x) + F.trace(y)) % 3);
    }
  }
  EXPECT_EQ(F.trace(F.one()), 0u);  // 1 + 1 + 1 in F_3
}

TEST(Curves, LegendreCountsOverF5) {
  const FqField F = FqField::build(5, 1);
  EXPECT_EQ(count_points(Legendre{F.from_int(2)}, F), 8u);
  EXPECT_EQ(count_points(Legendre{F.from_int(-2)}, F), 4u);
  EXPECT_EQ(trace_of_frobenius(Legendre{F.from_int(2)}, F), -2);
  EXPECT_EQ(trace_of_frobenius(Legendre{F.from_int(-2)}, F), 2);
  EXPECT_EQ(error_of([&] { count_points(Legendre{F.from_int(1)}, F); }), Errc::SingularCurve);
}

TEST(Curves, FamilyRestrictions) {
  const FqField F = FqField::build(7, 1);
  EXPECT_EQ(error_of([&] { validate(Legendre{F.from_int(-1)}, F); }), Errc::HypothesisViolation);
  EXPECT_EQ(error_of([&] { validate(A1A3{F.zero(), F.one()}, F); }), Errc::HypothesisViolation);
  EXPECT_EQ(error_of([&] { validate(FG{F.one(), F.zero()}, F); }), Errc::HypothesisViolation);
  EXPECT_EQ(error_of([&] { validate(CD{F.one(), F.zero()}, F); }), Errc::HypothesisViolation);
  const FqField F3 = FqField::build(3, 2);
  EXPECT_EQ(error_of([&] { validate(CD{F3.one(), F3.one()}, F3); }), Errc::HypothesisViolation);
}

TEST(Curves, CharacterSumMatchesEnumerationAndHasse) {
  for (auto [p, r] : {std::pair<u64, unsigned>{5, 1}, {7, 1}, {13, 1}, {3, 2}, {5, 2}, {13, 2}}) {
    const FqField F = FqField::build(p, r);
    const u64 q = F.q();
    const u64 step = q > 50 ? 11 : 1;
    for (u64 a = 1; a < q; a += step) {
      for (u64 b = 1; b < q; b += step + 2) {
        const FqElem u(static_cast<std::uint32_t>(a)), v(static_cast<std::uint32_t>(b));
        std::vector<CurveSpec> curves{Legendre{u}, FG{u, v}, Weierstrass{u, v, F.one(), u, v}};
        if (p > 3) {
          curves.push_back(A1A3{u, v});
          curves.push_back(CD{u, v});
        }
        for (const CurveSpec& c : curves) {
          try {
            validate(c, F);
          } catch (const MathError&) {
            continue;
          }
          const u64 n = count_points(c, F);
          EXPECT_EQ(n, count_points_exhaustive(c, F)) << family_name(c) << " q=" << q;
          EXPECT_TRUE(within_hasse_bound(static_cast<i64>(q) + 1 - static_cast<i64>(n), q));
        }
      }
    }
  }
}

TEST(Curves, LegendreTwoAndHalfAreSupersingularAtThreeModFour) {
  for (u64 p : {7ull, 11ull, 19ull, 23ull, 31ull, 43ull}) {
    const FqField F = FqField::build(p, 1);
    EXPECT_EQ(trace_of_frobenius(Legendre{F.from_int(2)}, F), 0) << p;
    EXPECT_EQ(trace_of_frobenius(Legendre{F.from_rational(Rational(1, 2))}, F), 0) << p;
  }
}

TEST(Curves, DiscriminantOfLegendre) {
  // Delta(E_lambda) = 16 lambda^2 (lambda - 1)^2.
  const FqField F = FqField::build(13, 1);
  for (i64 l = 2; l < 12; ++l) {
    const FqElem lam = F.from_int(l);
    const FqElem expected = F.mul(F.from_int(16), F.square(F.mul(lam, F.sub(lam, F.one()))));
    EXPECT_EQ(discriminant(to_weierstrass(Legendre{lam}, F), F), expected);
  }
}

}  // namespace
}  // namespace padichg
