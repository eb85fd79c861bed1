#include <gtest/gtest.h>

#include <random>

#include "dforge/modforms/hauptmodul.hpp"
#include "test_util.hpp"

using namespace dforge;

namespace {

const GaloisField& F3() { return GaloisField::get(3); }
const GaloisField* C3() { return &F3(); }
UPoly P3(std::vector<long long> c) { return upoly_from_ints(F3(), c); }
RatFn R3(std::vector<long long> c) { return RatFn(P3(std::move(c))); }
RatFn Tr() { return RatFn::variable(C3()); }
RatFn Ci(long long v) { return RatFn::from_int(C3(), v); }

SSeries poly_series(std::vector<RatFn> c, long long prec) { return SSeries::from_poly(C3(), std::move(c), prec); }

SSeries random_unit(std::mt19937_64& rng, long long prec) {
  std::vector<RatFn> c{Ci(1)};
  for (long long i = 1; i < prec; ++i) c.push_back(RatFn(dforge::testing::random_upoly(F3(), 2, rng)));
  return SSeries(C3(), 0, std::move(c));
}

}  // namespace

TEST(Series, GeometricInverse) {
  auto inv = poly_series({Ci(1), Ci(-1)}, 4).inverse();
  EXPECT_EQ(inv, poly_series({Ci(1), Ci(1), Ci(1), Ci(1)}, 4));
  EXPECT_EQ(inv.rel_prec(), 4);
}

TEST(Series, SquareRootOverF3) {
  auto r = poly_series({Ci(1), Ci(1)}, 3).nth_root(2, 3);
  EXPECT_EQ(r, poly_series({Ci(1), Ci(2), Ci(1)}, 3));
  EXPECT_EQ(r.pow(2), poly_series({Ci(1), Ci(1)}, 3));
  EXPECT_THROW(poly_series({Ci(1), Ci(1)}, 3).nth_root(3, 3), PreconditionError);
  EXPECT_THROW(poly_series({Ci(2), Ci(1)}, 3).nth_root(2, 3), PreconditionError);
}

TEST(Series, PrecisionContract) {
  auto a = poly_series({Ci(1), Tr()}, 5), b = poly_series({Ci(2), Ci(1)}, 3);
  EXPECT_EQ((a * b).rel_prec(), 3);
  EXPECT_EQ((a + b).abs_prec(), 3);
  EXPECT_EQ((a.shift(2) * b.shift(1)).abs_prec(), 6);
  EXPECT_EQ((a.shift(2) + b).abs_prec(), 3);
  EXPECT_EQ(a.inverse().rel_prec(), 5);
  // cancellation lowers relative precision, not absolute precision
  auto d = a - poly_series({Ci(1)}, 5);
  EXPECT_EQ(d.valuation(), 1);
  EXPECT_EQ(d.abs_prec(), 5);
  EXPECT_THROW(d.coeff(5), PreconditionError);
}

TEST(Series, RandomChainsKeepContractPrecision) {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 30; ++i) {
    const long long pa = 3 + static_cast<long long>(rng() % 8), pb = 3 + static_cast<long long>(rng() % 8);
    auto a = random_unit(rng, pa), b = random_unit(rng, pb);
    auto c = (a * b).inverse() * a;
    EXPECT_EQ(c.rel_prec(), std::min(pa, pb));
    auto one = c * b;
    EXPECT_EQ(one, SSeries::one(C3(), std::min(pa, pb)));
    auto r = a.pow(8).nth_root(8, 3);
    EXPECT_EQ(r, a);
    EXPECT_EQ(a.shift(2).pow(4).nth_root(4, 3), a.shift(2));
  }
}

TEST(Series, Compose) {
  auto h = poly_series({Ci(1), Ci(1)}, 10);
  auto s = SSeries(C3(), 1, {Ci(1), Ci(1), Ci(0), Ci(0)});
  auto c = h.compose(s);
  EXPECT_EQ(c.abs_prec(), 5);
  EXPECT_EQ(c, poly_series({Ci(1), Ci(1), Ci(1), Ci(0), Ci(0)}, 5));
  // (1 - S)^{-1} composed equals the inverse of 1 - S
  std::mt19937_64 rng(139);
  auto inner = random_unit(rng, 8).shift(1);
  auto geo = SSeries::one(C3(), 12).compose(inner);
  EXPECT_EQ(geo, SSeries::one(C3(), 9));
  auto lhs = poly_series({Ci(1), Ci(-1)}, 12).inverse().compose(inner);
  auto rhs = (SSeries::one(C3(), 9) - inner).inverse();
  EXPECT_EQ(lhs, rhs);
}

TEST(Series, Printing) {
  EXPECT_EQ(poly_series({Ci(1), Ci(0), Tr()}, 3).shift(1).to_string(), "s^1 * ((1) + (T)*s^2 + O(s^3))");
}

TEST(HSeries, LeadingCoefficients) {
  auto h = h_series(F3(), 27);
  EXPECT_EQ(h.valuation(), 0);
  EXPECT_EQ(h.coeff(0), Ci(-1));
  EXPECT_EQ(h.coeff(1), Ci(0));
  EXPECT_EQ(h.coeff(2), Ci(-1));
  EXPECT_EQ(h.coeff(3), power(Tr(), 3) - Tr());
  EXPECT_THROW(h_series(F3(), 28), PreconditionError);
  EXPECT_THROW(h_series(F3(), 0), PreconditionError);
}

TEST(HSeries, SatisfiesClearedIdentity) {
  // U^2 H = -U + s^{q^3-q^2}(U - 1) - s^{q^3-1} U^2 modulo s^{q^3}: products only.
  const long long n = 27;
  auto u = poly_series({Ci(1), Ci(0), Ci(-1), power(Tr(), 3) - Tr()}, n);
  auto h = h_series(F3(), n);
  auto lhs = u * u * h;
  auto rhs = -u + (u - SSeries::one(C3(), n)).shift(18) - (u * u).shift(26);
  EXPECT_EQ(lhs.abs_prec(), n);
  for (long long k = 0; k < n; ++k) EXPECT_EQ(lhs.coeff(k), rhs.coeff(k)) << k;
  // the final -s^26 term matters: dropping it breaks the identity
  auto without = -u * (u * u).inverse() + (u.inverse() - (u * u).inverse()).shift(18);
  EXPECT_EQ(h.coeff(26), without.coeff(26) - Ci(1));
}

TEST(TOfAz, Examples) {
  auto tz = t_of_az(P3({0, 1}), 5);
  EXPECT_EQ(tz.t_exp, 3);
  const RatFn t = Tr();
  EXPECT_EQ(tz.unit, poly_series({Ci(1), -t, t * t, -(t * t * t), t * t * t * t}, 5));
  auto tn = t_of_az(P3({1, 0, 1}), 6);
  EXPECT_EQ(tn.t_exp, 9);
  auto den = tn.unit.inverse();
  EXPECT_EQ(den, poly_series({Ci(1), Ci(0), Ci(0), power(t, 3) + t, t * t + Ci(1), Ci(0)}, 6));
  EXPECT_EQ(t_of_az(P3({1, 1, 1, 1}), 3).t_exp, 27);
  EXPECT_THROW(t_of_az(P3({1, 2}), 3), PreconditionError);
}

TEST(Hauptmoduls, Anchors) {
  auto hm = hauptmoduls(P3({1, 0, 1}), 27);
  const RatFn t = Tr();
  EXPECT_EQ(hm.f_t.valuation(), 1);
  EXPECT_EQ(hm.f_t.coeff(1), Ci(1));
  EXPECT_EQ(hm.f_t.coeff(2), -t);
  EXPECT_EQ(hm.f_t.coeff(3), t * t - Ci(1));
  EXPECT_EQ(hm.f_t.coeff(4), Ci(0));
  EXPECT_EQ(hm.under_root.valuation(), 8);
  EXPECT_EQ(hm.under_root.coeff(8), Ci(1));
  EXPECT_EQ(hm.under_root.coeff(9), t);
  EXPECT_EQ(hm.under_root.coeff(10), Ci(1));
  for (const auto* f : {&hm.f_t, &hm.f_n, &hm.f}) {
    EXPECT_EQ(f->valuation(), 1);
    EXPECT_EQ(f->leading(), Ci(1));
    EXPECT_EQ(f->rel_prec(), 27);
  }
  EXPECT_EQ(hm.f.pow(8), hm.under_root);
}

TEST(Hauptmoduls, RootsAreExact) {
  auto hs = h_series(F3(), 27);
  auto n = P3({1, 0, 1});
  auto hm = hauptmoduls(n, 27);
  auto ratio = (h_at(n, hs) / TSeries{1, hs}).to_s(3);
  EXPECT_EQ(hm.f_n.pow(4), ratio);
  EXPECT_THROW(hauptmoduls(P3({2, 0, 1}), 27), PreconditionError);
}

TEST(Relation, ExampleForN_T2Plus1) {
  const auto n = P3({1, 0, 1});
  auto rel = relation_poly(n, 27);
  const RatFn t = Tr(), nn = R3({1, 0, 1});
  std::vector<RatFn> expected(11, Ci(0));
  expected[0] = Ci(1);
  expected[3] = -(t * nn);
  expected[4] = -nn;
  expected[5] = -(t * nn);
  expected[6] = -nn;
  expected[7] = -(t * nn);
  expected[10] = Ci(1);
  EXPECT_EQ(rel.g, expected);
  EXPECT_EQ(rel.unknowns, 11);
  EXPECT_EQ(rel.equations, 27);
  EXPECT_GE(rel.equations - rel.unknowns, 5);
  EXPECT_GE(rel.residual_precision, 27);
  EXPECT_EQ(rel.p.coeff(2, 9), power(t, 4));
  EXPECT_EQ(rel.p.coeff(0, 1), Ci(1));
  EXPECT_EQ(rel.p.coeff(2, 2), Ci(0));
  EXPECT_EQ(rel.p.x_degree(), 2);
  EXPECT_EQ(rel.p.y_degree(), 10);
  EXPECT_EQ(wt_symmetry_unit(rel.p, 3), Ci(1));
}

TEST(Relation, Preconditions) {
  EXPECT_THROW(relation_poly(P3({2, 1, 1}), 27), PreconditionError);
  EXPECT_THROW(relation_poly(P3({1, 0, 1}), 12), PreconditionError);
}

TEST(Relation, OtherSquareConstantPrime) {
  for (const auto& n : monic_irreducibles(F3(), 2)) {
    if (!n.constant_term().is_square()) continue;
    auto rel = relation_poly(n, 27);
    EXPECT_EQ(rel.g.front(), Ci(1));
    EXPECT_EQ(rel.g.back(), Ci(1));
    EXPECT_EQ(wt_symmetry_unit(rel.p, 3), Ci(1));
  }
}

TEST(LinearSolve, DetectsInconsistency) {
  const auto& f = GaloisField::get(5);
  auto g = [&](long long v) { return Gf::from_int(&f, v); };
  std::vector<std::vector<Gf>> a{{g(1), g(0)}, {g(0), g(1)}, {g(1), g(1)}};
  EXPECT_EQ(solve_overdetermined(a, {g(2), g(3), g(0)}), (std::vector<Gf>{g(2), g(3)}));
  EXPECT_THROW(solve_overdetermined(a, {g(2), g(3), g(1)}), ConsistencyError);
  std::vector<std::vector<Gf>> deficient{{g(1), g(2)}, {g(2), g(4)}, {g(3), g(1)}};
  EXPECT_THROW(solve_overdetermined(deficient, {g(1), g(2), g(3)}), ConsistencyError);
}
