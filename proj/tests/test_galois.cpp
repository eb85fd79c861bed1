#include <gtest/gtest.h>

#include <random>

#include "dforge/galois/chebotarev.hpp"
#include "test_util.hpp"

using namespace dforge;

namespace {

const GaloisField& F3() { return GaloisField::get(3); }

const CoverPoly& example() {
  static const CoverPoly cp = [] {
    const UPoly n = upoly_from_ints(F3(), {1, 0, 1});
    return mobius_numerator(relation_poly(n, h_precision_cap(3)).p, n);
  }();
  return cp;
}

/// Monic in y of degree 10, other coefficients random in F_3[T] with x-degree <= 1.
CoverPoly random_cover(std::mt19937_64& rng) {
  KBivar p = KBivar::zero(&F3());
  p.add_term(0, 10, RatFn::one(&F3()));
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i <= 1; ++i) p.add_term(i, j, RatFn(dforge::testing::random_upoly(F3(), 2, rng)));
  return CoverPoly{p, upoly_from_ints(F3(), {1, 0, 1})};
}

ChebotarevConfig config(int trials, std::uint64_t seed) {
  ChebotarevConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(Factor, SmallExamples) {
  const auto f = factor_ff(upoly_from_ints(F3(), {2, 0, 1}));
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(f.factors[0].first, upoly_from_ints(F3(), {1, 1}));
  EXPECT_EQ(f.factors[1].first, upoly_from_ints(F3(), {2, 1}));
  const auto g = factor_ff(upoly_from_ints(F3(), {1, 0, 1}));
  ASSERT_EQ(g.factors.size(), 1U);
  EXPECT_EQ(g.factors[0].first.degree(), 2);
}

TEST(Factor, RepeatedAndInseparableParts) {
  // (x+1)^3 (x^2+1)^2 x over F_3
  const UPoly a = upoly_from_ints(F3(), {1, 1});
  const UPoly b = upoly_from_ints(F3(), {1, 0, 1});
  const UPoly x = upoly_from_ints(F3(), {0, 1});
  const UPoly f = power(a, 3) * power(b, 2) * x;
  const auto fac = factor_ff(f);
  EXPECT_EQ(fac.product(), f);
  ASSERT_EQ(fac.factors.size(), 3U);
  EXPECT_FALSE(is_squarefree(f));
}

TEST(Factor, RandomReconstructionOverF9) {
  const GaloisField& f9 = GaloisField::get(3, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const UPoly f = dforge::testing::random_nonzero_upoly(f9, 10, rng);
    const auto fac = factor_ff(f, static_cast<std::uint64_t>(trial));
    EXPECT_EQ(fac.product(), f);
    for (const auto& [g, e] : fac.factors) {
      EXPECT_TRUE(is_irreducible(g));
      EXPECT_EQ(g.leading(), Gf::one(&f9));
      EXPECT_GE(e, 1);
    }
  }
}

TEST(Factor, DegreesMatchRootCounts) {
  // the number of roots in F_{Q^j} is the sum of the factor degrees dividing j
  const GaloisField& f9 = GaloisField::get(3, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    UPoly f = dforge::testing::random_nonzero_upoly(f9, 8, rng);
    if (f.degree() < 2 || !is_squarefree(f)) continue;
    const auto fac = factor_ff(f);
    for (unsigned j = 1; j <= 3; ++j) {
      std::uint64_t expect = 0;
      for (const auto& [g, e] : fac.factors)
        if (j % static_cast<unsigned>(g.degree()) == 0) expect += static_cast<std::uint64_t>(g.degree());
      EXPECT_EQ(count_roots_in_extension(f, j), expect);
    }
  }
}

TEST(Oracle, CycleTypeLabel) {
  EXPECT_EQ(CycleType({2, 1, 2, 2, 1, 2}).label(), "1^2 2^4");
  EXPECT_EQ(CycleType({10}).label(), "10");
  EXPECT_TRUE(CycleType({1, 1, 1}).is_identity());
  EXPECT_THROW(CycleType({0, 2}), PreconditionError);
}

TEST(Oracle, Psl29Classes) {
  const auto o = psl_oracle(9);
  EXPECT_EQ(o.order, 360U);
  EXPECT_EQ(o.points, 10);
  const std::map<CycleType, std::uint64_t> expect{{CycleType(std::vector<int>(10, 1)), 1},
                                                  {CycleType({1, 1, 2, 2, 2, 2}), 45},
                                                  {CycleType({1, 3, 3, 3}), 80},
                                                  {CycleType({1, 1, 4, 4}), 90},
                                                  {CycleType({5, 5}), 144}};
  EXPECT_EQ(o.classes, expect);
}

TEST(Oracle, SmallGroupOrders) {
  EXPECT_EQ(psl_oracle(3).order, 12U);
  EXPECT_EQ(psl_oracle(4).order, 60U);
  EXPECT_EQ(psl_oracle(5).order, 60U);
  EXPECT_EQ(psl_oracle(7).order, 168U);
  EXPECT_EQ(pgl_oracle(9).order, 720U);
  EXPECT_THROW(psl_oracle(6), PreconditionError);
}

TEST(Oracle, PglContainsPsl) {
  const auto s = psl_oracle(9);
  const auto g = pgl_oracle(9);
  for (const auto& [ct, n] : s.classes) {
    ASSERT_TRUE(g.classes.count(ct));
    EXPECT_GE(g.classes.at(ct), n);
  }
  EXPECT_EQ(g.classes.at(CycleType({10})), 144U);
  EXPECT_EQ(g.classes.at(CycleType({1, 1, 8})), 180U);
  EXPECT_EQ(g.classes.at(CycleType({2, 2, 2, 2, 2})), 36U);
}

TEST(Chebotarev, Reproducible) {
  const auto a = chebotarev_report(example(), config(120, 7));
  const auto b = chebotarev_report(example(), config(120, 7));
  EXPECT_EQ(a.observed, b.observed);
  EXPECT_EQ(a.discarded, b.discarded);
  EXPECT_EQ(a.samples + a.discarded, 120U);
  auto one = config(120, 7);
  one.threads = 1;
  EXPECT_EQ(chebotarev_report(example(), one).observed, a.observed);
}

TEST(Chebotarev, RejectsBadConfig) {
  EXPECT_THROW(chebotarev_report(example(), config(0, 1)), PreconditionError);
  auto cfg = config(10, 1);
  cfg.ext_degrees.clear();
  EXPECT_THROW(chebotarev_report(example(), cfg), PreconditionError);
}

TEST(Chebotarev, ExampleFrobeniusLiesInPgl29) {
  // observed Frobenius types of the example cover all lie in PGL(2,9)
  const auto r = chebotarev_report(example(), config(500, 1), pgl_oracle(9));
  EXPECT_TRUE(r.containment);
  EXPECT_TRUE(r.coverage);
}

TEST(Chebotarev, NegativeControlFailsContainment) {
  std::mt19937_64 rng(2024);
  int failed = 0;
  for (int i = 0; i < 20; ++i) {
    const auto r = chebotarev_report(random_cover(rng), config(200, static_cast<std::uint64_t>(i) + 1));
    if (!r.containment) ++failed;
  }
  EXPECT_GT(failed, 18);
}
