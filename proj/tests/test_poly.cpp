#include <gtest/gtest.h>

#include <random>

#include "dforge/algebra/ffpoly.hpp"
#include "dforge/algebra/modring.hpp"
#include "dforge/algebra/quadext.hpp"
#include "dforge/algebra/ratfn.hpp"
#include "test_util.hpp"

using namespace dforge;
using dforge::testing::random_nonzero_ratfn;
using dforge::testing::random_nonzero_upoly;
using dforge::testing::random_ratfn;
using dforge::testing::random_upoly;

namespace {

const GaloisField& F3() { return GaloisField::get(3); }
UPoly P3(std::vector<long long> c) { return upoly_from_ints(F3(), c); }

}  // namespace

TEST(UPoly, ScholbookProduct) {
  EXPECT_EQ(P3({1, 0, 1}) * P3({1, 1}), P3({1, 1, 1, 1}));
}

TEST(UPoly, GcdIsMonicCommonFactor) {
  EXPECT_EQ(gcd(P3({-1, 0, 1}), P3({-1, 1})), P3({-1, 1}));
  EXPECT_EQ(gcd(P3({2, 0, 2}), P3({1, 1})), P3({1}));
}

TEST(UPoly, DivmodByHand) {
  // T^3 = T (T^2 + 1) - T
  auto [q, r] = P3({0, 0, 0, 1}).divmod(P3({1, 0, 1}));
  EXPECT_EQ(q, P3({0, 1}));
  EXPECT_EQ(r, P3({0, -1}));
}

TEST(UPoly, DivmodReconstructs) {
  std::mt19937_64 rng(3);
  const auto& f = GaloisField::get(5, 2);
  for (int i = 0; i < 200; ++i) {
    UPoly a = random_upoly(f, 9, rng), b = random_nonzero_upoly(f, 5, rng);
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(P3({1}).divmod(P3({})), PreconditionError);
}

TEST(UPoly, DegreeOfZeroIsMinusOne) {
  EXPECT_EQ(P3({}).degree(), -1);
  EXPECT_EQ(P3({0, 0}).degree(), -1);
  EXPECT_EQ(P3({2, 1}).to_string(), "T+2");
}

TEST(UPoly, XgcdBezout) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    UPoly a = random_nonzero_upoly(F3(), 7, rng), b = random_nonzero_upoly(F3(), 7, rng);
    auto [g, s, t] = xgcd(a, b);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_EQ(g, gcd(a, b));
  }
}

TEST(Irreducible, SmallExamples) {
  EXPECT_TRUE(is_irreducible(P3({1, 0, 1})));
  EXPECT_FALSE(is_irreducible(P3({2, 0, 1})));
  EXPECT_TRUE(is_irreducible(P3({0, 1})));
  EXPECT_FALSE(is_irreducible(P3({2})));
  EXPECT_THROW(is_irreducible(P3({})), PreconditionError);
}

TEST(Irreducible, MatchesRootlessBruteForceForCubics) {
  // a cubic is reducible iff it has a root in F_3
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        UPoly f = P3({c, b, a, 1});
        bool has_root = false;
        for (const auto& x : elements(F3())) has_root |= f.eval(x).is_zero();
        EXPECT_EQ(is_irreducible(f), !has_root) << f.to_string();
        count += !has_root;
      }
  EXPECT_EQ(count, 8);  // (3^3 - 3) / 3
}

TEST(Irreducible, CountOverF9MatchesNecklaceFormula) {
  const auto& f9 = GaloisField::get(3, 2);
  // (9^2 - 9) / 2 = 36 monic irreducible quadratics over F_9
  EXPECT_EQ(monic_irreducibles(f9, 2).size(), 36u);
}

TEST(RootCount, ExtensionDegrees) {
  // X^3 + X over F_3 = X (X^2 + 1): one root in F_3, three in F_9
  UPoly f = P3({0, 1, 0, 1});
  EXPECT_EQ(count_roots_in_extension(f, 1), 1);
  EXPECT_EQ(count_roots_in_extension(f, 2), 3);
}

TEST(RatFn, NormalizedOnConstruction) {
  RatFn r(P3({-1, 0, 1}), P3({2, 2}));  // (T^2-1) / (2T+2) = (T-1)/2 = 2T - 2
  EXPECT_EQ(r.den(), P3({1}));
  EXPECT_EQ(r.num(), P3({-2, 2}));
  EXPECT_THROW(RatFn(P3({1}), P3({})), PreconditionError);
}

TEST(RatFn, FieldAxioms) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    RatFn a = random_ratfn(F3(), 3, rng), b = random_ratfn(F3(), 3, rng), c = random_ratfn(F3(), 3, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), RatFn::one(&F3()));
    }
    EXPECT_TRUE(a.den().is_monic());
    EXPECT_EQ(gcd(a.num().is_zero() ? P3({1}) : a.num(), a.den()), P3({1}));
  }
}

TEST(RatFn, FrobeniusAgreesWithPower) {
  std::mt19937_64 rng(19);
  const auto& f9 = GaloisField::get(3, 2);
  for (int i = 0; i < 50; ++i) {
    RatFn a = random_nonzero_ratfn(f9, 3, rng);
    EXPECT_EQ(frobenius(a, 3), power(a, 3));
    EXPECT_EQ(frobenius(a, 9), power(a, 9));
  }
}

TEST(QuadExt, SquareRootSquaresToRadicand) {
  const auto& f = F3();
  RatFn N(P3({1, 0, 1}));
  auto ctx = QuadExt<RatFn>::make_context(N);
  auto w = QuadExt<RatFn>::root(ctx);
  EXPECT_EQ(w * w, QuadExt<RatFn>::embed(ctx, N));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    QuadExt<RatFn> a(ctx, random_ratfn(f, 2, rng), random_ratfn(f, 2, rng));
    QuadExt<RatFn> b(ctx, random_ratfn(f, 2, rng), random_ratfn(f, 2, rng));
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), QuadExt<RatFn>::one(ctx));
    }
    EXPECT_EQ(frobenius(a, 3), power(a, 3));
  }
}

TEST(Residue, InverseModPrime) {
  auto ctx = Residue::make_context(P3({1, 0, 1}));
  Residue t(ctx, P3({0, 1}));
  EXPECT_EQ(t * t.inverse(), Residue::one(ctx));
  EXPECT_EQ(t * t, Residue::from_int(ctx, -1));
  EXPECT_THROW(Residue::make_context(P3({2, 0, 1})), PreconditionError);
}
