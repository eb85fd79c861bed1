#include <gtest/gtest.h>

#include <map>
#include <set>
#include <random>

#include "dforge/algebra/reciprocity.hpp"
#include "test_util.hpp"

using namespace dforge;

namespace {

const GaloisField& F3() { return GaloisField::get(3); }
UPoly P3(std::vector<long long> c) { return upoly_from_ints(F3(), c); }

// Legendre symbol by brute force: is a a nonzero square in F_q[T]/p?
int brute_character(const UPoly& a, const UPoly& p) {
  UPoly r = a % p;
  if (r.is_zero()) return 0;
  // enumerate all residues of degree < deg p
  const auto& f = *p.context();
  const int d = p.degree();
  std::vector<std::uint64_t> digit(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<Gf> c;
    for (auto x : digit) c.push_back(Gf(&f, static_cast<Gf::Code>(x)));
    UPoly s(&f, c);
    if (((s * s) % p) == r) return 1;
    int pos = 0;
    while (pos < d && ++digit[static_cast<std::size_t>(pos)] == f.order()) digit[static_cast<std::size_t>(pos++)] = 0;
    if (pos == d) return -1;
  }
}

}  // namespace

TEST(QuadraticCharacter, SmallExamples) {
  EXPECT_EQ(quadratic_character(P3({0, 1}), P3({1, 0, 1})), 1);
  EXPECT_EQ(quadratic_character(P3({1, 0, 1}), P3({1, 0, 1})), 0);
  EXPECT_EQ(quadratic_character(P3({2}), P3({1, 0, 1})), 1);
  EXPECT_THROW(quadratic_character(P3({1}), P3({2, 0, 1})), PreconditionError);
}

TEST(QuadraticCharacter, AgreesWithBruteForceSquares) {
  std::mt19937_64 rng(29);
  auto primes = monic_irreducibles(F3(), 2);
  auto cubics = monic_irreducibles(F3(), 3);
  primes.insert(primes.end(), cubics.begin(), cubics.end());
  for (const auto& p : primes)
    for (int i = 0; i < 10; ++i) {
      UPoly a = dforge::testing::random_upoly(F3(), 5, rng);
      EXPECT_EQ(quadratic_character(a, p), brute_character(a, p)) << a.to_string() << " mod " << p.to_string();
    }
}

TEST(QuadraticCharacter, SquaresAreResidues) {
  std::mt19937_64 rng(31);
  const auto& f9 = GaloisField::get(3, 2);
  auto primes = monic_irreducibles(f9, 2);
  for (int i = 0; i < 100; ++i) {
    const auto& p = primes[rng() % primes.size()];
    UPoly a = dforge::testing::random_nonzero_upoly(f9, 4, rng);
    if ((a % p).is_zero()) continue;
    EXPECT_EQ(quadratic_character(a * a, p), 1);
  }
}

TEST(Reciprocity, SignExamples) {
  EXPECT_EQ(reciprocity_sign(P3({0, 1}), P3({1, 0, 1})), 1);
  EXPECT_EQ(reciprocity_sign(P3({0, 1}), P3({1, 1})), -1);
  EXPECT_EQ(quadratic_character(P3({0, 1}), P3({1, 0, 1})) * quadratic_character(P3({1, 0, 1}), P3({0, 1})), 1);
  EXPECT_THROW(reciprocity_sign(P3({0, 1}), P3({0, 1})), PreconditionError);
  EXPECT_THROW(reciprocity_sign(P3({0, 2}), P3({1, 1})), PreconditionError);
}

TEST(Reciprocity, RandomPairsOverF9) {
  const auto& f9 = GaloisField::get(3, 2);
  std::vector<UPoly> primes;
  for (int d = 1; d <= 2; ++d) {
    auto v = monic_irreducibles(f9, d);
    primes.insert(primes.end(), v.begin(), v.end());
  }
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const auto& P = primes[rng() % primes.size()];
    const auto& Q = primes[rng() % primes.size()];
    if (P == Q) continue;
    EXPECT_EQ(quadratic_character(P, Q) * quadratic_character(Q, P), reciprocity_sign(P, Q));
  }
}

TEST(HansenMullen, SmallExamples) {
  EXPECT_EQ(hansen_mullen_search(2, Gf::from_int(&F3(), 1)), P3({1, 0, 1}));
  EXPECT_EQ(hansen_mullen_search(2, Gf::from_int(&F3(), 2)), P3({2, 1, 1}));
  EXPECT_EQ(hansen_mullen_search(1, Gf::from_int(&F3(), 1)), P3({1, 1}));
  EXPECT_THROW(hansen_mullen_search(2, Gf::zero(&F3())), PreconditionError);
}

TEST(HansenMullen, OutputContract) {
  for (const auto* f : {&GaloisField::get(3), &GaloisField::get(5), &GaloisField::get(3, 2)})
    for (int d = 1; d <= 4; ++d)
      for (std::uint64_t c = 1; c < f->order(); ++c) {
        Gf xi(f, static_cast<Gf::Code>(c));
        UPoly p = hansen_mullen_search(d, xi);
        EXPECT_TRUE(is_irreducible(p));
        EXPECT_TRUE(p.is_monic());
        EXPECT_EQ(p.degree(), d);
        EXPECT_EQ(p.constant_term(), xi);
      }
}

TEST(HansenMullen, PerConstantCountsMatchExhaustiveEnumeration) {
  // Count irreducibles by constant term two ways: root/factor-free brute
  // force over all products of lower-degree monics, and the Rabin test.
  for (int d = 1; d <= 3; ++d) {
    std::map<std::uint32_t, int> by_rabin, by_sieve;
    for (const auto& p : monic_irreducibles(F3(), d)) ++by_rabin[p.constant_term().code()];
    // sieve: a monic of degree d is reducible iff it is a product of two monics of lower positive degree
    std::vector<UPoly> all_monic_lower;
    for (int e = 1; e < d; ++e)
      for (std::uint64_t c = 0; c < 3; ++c)
        for_each_monic_with_constant(F3(), e, Gf(&F3(), static_cast<Gf::Code>(c)), [&](const UPoly& f) {
          all_monic_lower.push_back(f);
          return false;
        });
    std::set<std::vector<std::uint32_t>> reducible;
    for (const auto& a : all_monic_lower)
      for (const auto& b : all_monic_lower)
        if (a.degree() + b.degree() == d) {
          const UPoly prod = a * b;
          std::vector<std::uint32_t> key;
          for (const auto& x : prod.coeffs()) key.push_back(x.code());
          reducible.insert(key);
        }
    for (std::uint64_t c = 0; c < 3; ++c)
      for_each_monic_with_constant(F3(), d, Gf(&F3(), static_cast<Gf::Code>(c)), [&](const UPoly& f) {
        std::vector<std::uint32_t> key;
        for (const auto& x : f.coeffs()) key.push_back(x.code());
        if (!reducible.count(key)) ++by_sieve[f.constant_term().code()];
        return false;
      });
    EXPECT_EQ(by_rabin, by_sieve) << "degree " << d;
  }
}

TEST(ChoosePrime, HitsRequestedCharacter) {
  UPoly p = choose_prime(2, Gf::from_int(&F3(), 2), -1);
  EXPECT_EQ(quadratic_character(P3({0, 2}), p), -1);
  EXPECT_EQ(p, P3({2, 1, 1}));
  EXPECT_EQ(choose_prime(2, Gf::from_int(&F3(), 1), 1), P3({1, 0, 1}));
  for (int d = 2; d <= 5; ++d)
    for (int zeta = 1; zeta <= 2; ++zeta)
      for (int sign : {1, -1}) {
        UPoly q = choose_prime(d, Gf::from_int(&F3(), zeta), sign);
        EXPECT_EQ(quadratic_character(P3({0, zeta}), q), sign);
        EXPECT_EQ(q.degree(), d);
      }
  EXPECT_THROW(choose_prime(1, Gf::from_int(&F3(), 1), 1), PreconditionError);
}
