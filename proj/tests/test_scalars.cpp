#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "timps/scalars.hpp"

using timps::GaussianRational;

namespace {

GaussianRational q(long num, long den, long inum = 0, long iden = 1) {
  return GaussianRational(mpq_class(num, den), mpq_class(inum, iden));
}

GaussianRational random_gr(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return q(num(rng), den(rng), num(rng), den(rng));
}

}  // namespace

TEST(Scalars, ConjugateProduct) {
  EXPECT_EQ(q(1, 2, 1, 1) * q(1, 2, -1, 1), q(5, 4));
}

TEST(Scalars, InverseOfI) {
  EXPECT_EQ(timps::gr_inv(GaussianRational::i()), -GaussianRational::i());
}

TEST(Scalars, RationalReduction) {
  const GaussianRational s = timps::gr_add(q(1, 3), q(1, 6));
  EXPECT_EQ(s, q(1, 2));
  EXPECT_EQ(s.re().get_num(), 1);
  EXPECT_EQ(s.re().get_den(), 2);
}

TEST(Scalars, DivisionByZero) {
  EXPECT_THROW(timps::gr_inv(GaussianRational()), timps::DivisionByZero);
  EXPECT_THROW(GaussianRational(3) / GaussianRational(0), timps::DivisionByZero);
}

TEST(Scalars, ToComplex) {
  EXPECT_EQ(timps::to_complex(q(1, 2)), std::complex<double>(0.5, 0.0));
  EXPECT_EQ(timps::to_complex(q(-1, 3)).real(), -1.0 / 3.0);
  EXPECT_EQ(timps::to_complex(GaussianRational::i()), std::complex<double>(0.0, 1.0));
}

TEST(Scalars, ToDoubleOverflowIsRangeError) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  EXPECT_THROW(timps::to_double(mpq_class(big)), std::range_error);
}

TEST(Scalars, ParseAndPrint) {
  EXPECT_EQ(GaussianRational::parse("1/2+3/4*i"), q(1, 2, 3, 4));
  EXPECT_EQ(GaussianRational::parse(" -2 / 4 - i "), q(-1, 2, -1, 1));
  EXPECT_EQ(GaussianRational::parse("i"), GaussianRational::i());
  EXPECT_EQ(GaussianRational::parse("0"), GaussianRational());
  EXPECT_THROW(GaussianRational::parse("1/0"), timps::ParseError);
  EXPECT_THROW(GaussianRational::parse(""), timps::ParseError);
  EXPECT_THROW(GaussianRational::parse("1.5"), timps::ParseError);

  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const GaussianRational a = random_gr(rng);
    EXPECT_EQ(GaussianRational::parse(a.str()), a) << a.str();
  }
}

TEST(Scalars, FieldAxioms) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const GaussianRational a = random_gr(rng);
    const GaussianRational b = random_gr(rng);
    const GaussianRational c = random_gr(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + timps::gr_neg(a), GaussianRational());
    if (!a.is_zero()) EXPECT_EQ(a * a.inv(), GaussianRational(1));
  }
}

TEST(Scalars, ToComplexIsMultiplicative) {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const GaussianRational a = random_gr(rng);
    const GaussianRational b = random_gr(rng);
    const std::complex<double> exact = timps::to_complex(a * b);
    const std::complex<double> approx = timps::to_complex(a) * timps::to_complex(b);
    EXPECT_LE(std::abs(exact - approx), 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(exact)));
  }
}

TEST(Scalars, PowAndHash) {
  EXPECT_EQ(GaussianRational::i().pow(4), GaussianRational(1));
  EXPECT_EQ(q(2, 3).pow(0), GaussianRational(1));
  EXPECT_EQ(std::hash<GaussianRational>{}(q(2, 4)), std::hash<GaussianRational>{}(q(1, 2)));
}
