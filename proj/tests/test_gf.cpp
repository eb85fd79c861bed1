#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dforge/algebra/gf.hpp"
#include "test_util.hpp"

using namespace dforge;
using dforge::testing::random_gf;
using dforge::testing::random_nonzero_gf;

namespace {

void check_field_axioms(const GaloisField& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 300; ++i) {
    Gf a = random_gf(f, rng), b = random_gf(f, rng), c = random_gf(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a + (-a), Gf::zero(&f));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Gf::one(&f));
    }
  }
}

}  // namespace

TEST(GaloisField, PrimeFieldAxioms) {
  check_field_axioms(GaloisField::get(3), 1);
  check_field_axioms(GaloisField::get(101), 2);
}

TEST(GaloisField, ExtensionFieldAxioms) {
  check_field_axioms(GaloisField::get(3, 2), 3);
  check_field_axioms(GaloisField::get(3, 4), 4);
  check_field_axioms(GaloisField::get(5, 3), 5);
}

TEST(GaloisField, DefaultModulusIsSmallestIrreducible) {
  // x^2 + 1 is the first monic irreducible quadratic over F_3
  EXPECT_EQ(GaloisField::get(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(GaloisField, PrimitiveElementGeneratesEverything) {
  const auto& f = GaloisField::get(3, 3);
  Gf g(&f, f.primitive());
  std::set<Gf::Code> seen;
  Gf x = Gf::one(&f);
  for (std::uint64_t i = 0; i + 1 < f.order(); ++i) {
    seen.insert(x.code());
    x = x * g;
  }
  EXPECT_EQ(seen.size(), f.order() - 1);
  EXPECT_TRUE(x.is_one());
}

TEST(GaloisField, FrobeniusIsAdditive) {
  const auto& f = GaloisField::get(3, 4);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Gf a = random_gf(f, rng), b = random_gf(f, rng);
    EXPECT_EQ(frobenius(a + b, 3), frobenius(a, 3) + frobenius(b, 3));
  }
}

TEST(GaloisField, SquaresAreHalfOfUnits) {
  const auto& f = GaloisField::get(3, 2);
  int squares = 0;
  for (const auto& x : elements(f))
    if (!x.is_zero() && x.is_square()) ++squares;
  EXPECT_EQ(squares, 4);
  EXPECT_FALSE(Gf::from_int(&GaloisField::get(3), 2).is_square());
  EXPECT_TRUE(Gf::from_int(&GaloisField::get(3), 2).pow(2).is_square());
}

TEST(GaloisField, RejectsBadInput) {
  EXPECT_THROW(GaloisField::get(9), PreconditionError);
  EXPECT_THROW(GaloisField::get(3, std::vector<std::uint32_t>{2, 0, 1}), PreconditionError);  // x^2+2 = (x-1)(x+1)
  EXPECT_THROW(Gf::zero(&GaloisField::get(3)).inverse(), PreconditionError);
  EXPECT_THROW(Gf::one(&GaloisField::get(3)) + Gf::one(&GaloisField::get(5)), PreconditionError);
}

TEST(Embedding, IsARingHomomorphism) {
  const auto& small = GaloisField::get(3, 2);
  const auto& big = GaloisField::get(3, 4);
  Embedding e(small, big);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Gf a = random_gf(small, rng), b = random_gf(small, rng);
    EXPECT_EQ(e(a + b), e(a) + e(b));
    EXPECT_EQ(e(a * b), e(a) * e(b));
  }
  EXPECT_TRUE(e(Gf::one(&small)).is_one());
  EXPECT_THROW(Embedding(GaloisField::get(3, 2), GaloisField::get(3, 3)), PreconditionError);
}
