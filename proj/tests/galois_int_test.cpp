#include "morava/galois_int.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

namespace morava {
namespace {

constexpr int kN = 24;

GaloisInt gi(std::int64_t re, std::int64_t im, int n = kN) { return GaloisInt(re, im, n); }

TEST(GaloisIntTest, DefiningRelation) {
  const auto i = GaloisInt::unit_i(kN);
  EXPECT_EQ(i * i, gi(-1, 0));
  EXPECT_EQ((i * i).re(), pow3(kN) - 1);
}

TEST(GaloisIntTest, NormOfOnePlusI) { EXPECT_EQ(gi(1, 1) * gi(1, -1), gi(2, 0)); }

TEST(GaloisIntTest, WrapsAroundModulus) {
  const auto top = GaloisInt::from_residues(pow3(kN) - 1, 0, kN);
  EXPECT_TRUE((top + gi(1, 0)).is_zero());
}

TEST(GaloisIntTest, AdditionDoesNotOverflowAtMaxPrecision) {
  const auto m = pow3(kMaxPrecision);
  const auto a = GaloisInt::from_residues(m - 1, m - 2, kMaxPrecision);
  const auto s = a + a;
  EXPECT_EQ(s.re(), m - 2);
  EXPECT_EQ(s.im(), m - 4);
  EXPECT_EQ((a * a).precision(), kMaxPrecision);
  // (-1 - 2i)^2 = -3 + 4i
  EXPECT_EQ(a * a, GaloisInt(-3, 4, kMaxPrecision));
}

TEST(GaloisIntTest, Frobenius) {
  EXPECT_EQ(GaloisInt::unit_i(kN).frobenius(), gi(0, -1));
  EXPECT_EQ(gi(5, 0).frobenius(), gi(5, 0));
  EXPECT_EQ(gi(2, 7).frobenius(), gi(2, -7));
}

TEST(GaloisIntTest, ExactDivisionByThree) {
  const auto six = gi(6, 0).exact_div3();
  EXPECT_EQ(six, gi(2, 0, kN - 1));
  EXPECT_EQ(six.precision(), kN - 1);
  EXPECT_EQ(gi(0, 9).exact_div3(), gi(0, 3, kN - 1));
  EXPECT_THROW(gi(1, 0).exact_div3(), NotDivisibleBy3);
  EXPECT_THROW(gi(3, 1).exact_div3(), NotDivisibleBy3);
  EXPECT_THROW(gi(0, 0, 1).exact_div3(), PrecisionExhausted);
}

TEST(GaloisIntTest, Inverse) {
  EXPECT_EQ(GaloisInt::unit_i(kN).inverse(), gi(0, -1));
  EXPECT_EQ(gi(2, 0).inverse(), GaloisInt::from_residues((pow3(kN) + 1) / 2, 0, kN));
  EXPECT_THROW(gi(3, 0).inverse(), NotAUnit);
  EXPECT_THROW(gi(3, 6).inverse(), NotAUnit);
}

TEST(GaloisIntTest, MixedPrecisionTakesMinimum) {
  const auto a = gi(10, 4, 5);
  const auto b = gi(7, 1, 3);
  EXPECT_EQ((a + b).precision(), 3);
  EXPECT_EQ((a * b).precision(), 3);
  EXPECT_EQ(a * b, gi(10 * 7 - 4 * 1, 10 * 1 + 4 * 7, 3));
}

TEST(GaloisIntTest, RejectsUnsupportedPrecision) {
  EXPECT_THROW(GaloisInt(1, 0, 0), std::invalid_argument);
  EXPECT_THROW(GaloisInt(1, 0, kMaxPrecision + 1), std::invalid_argument);
  EXPECT_THROW(PrecisionProfile(24, 0), std::invalid_argument);
}

TEST(GaloisIntTest, DecimalLiteralReduces) {
  // 3^24 + 5 written out
  EXPECT_EQ(GaloisInt::from_decimal("282429536486", kN), gi(5, 0));
  // 10^29 mod 3^24, computed with Python integers
  EXPECT_EQ(GaloisInt::from_decimal("100000000000000000000000000000", kN),
            GaloisInt::from_residues(269258460544ULL, 0, kN));
}

// Brute force over all 81 elements of Z[i]/(9): the unit criterion must agree
// with the existence of an inverse, and the product must agree with plain
// integer arithmetic reduced afterwards.
TEST(GaloisIntTest, ExhaustiveAtPrecisionTwo) {
  const int n = 2;
  const std::int64_t m = 9;
  for (std::int64_t ar = 0; ar < m; ++ar)
    for (std::int64_t ai = 0; ai < m; ++ai) {
      const GaloisInt a(ar, ai, n);
      bool has_inverse = false;
      for (std::int64_t br = 0; br < m; ++br)
        for (std::int64_t bi = 0; bi < m; ++bi) {
          const GaloisInt b(br, bi, n);
          const auto p = a * b;
          EXPECT_EQ(p.re(), static_cast<std::uint64_t>(((ar * br - ai * bi) % m + m) % m));
          EXPECT_EQ(p.im(), static_cast<std::uint64_t>((ar * bi + ai * br) % m));
          if (p == GaloisInt(1, 0, n)) has_inverse = true;
        }
      EXPECT_EQ(a.is_unit(), has_inverse) << a;
      EXPECT_EQ(a.is_unit(), ar % 3 != 0 || ai % 3 != 0);
      if (a.is_unit()) {
        EXPECT_EQ(a * a.inverse(), GaloisInt(1, 0, n));
      }
    }
}

class GaloisIntProperties : public ::testing::TestWithParam<int> {};

TEST_P(GaloisIntProperties, RingAndFrobeniusLaws) {
  const int n = GetParam();
  std::mt19937_64 rng(1234 + static_cast<unsigned>(n));
  const auto m = pow3(n);
  auto draw = [&] { return GaloisInt::from_residues(rng() % m, rng() % m, n); };
  for (int t = 0; t < 200; ++t) {
    const auto a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, GaloisInt(0, 0, n));
    EXPECT_EQ(a.frobenius().frobenius(), a);
    EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
    EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
    if (a.is_unit()) {
      EXPECT_EQ(a * a.inverse(), GaloisInt(1, 0, n));
    } else {
      EXPECT_THROW(a.inverse(), NotAUnit);
    }
    if (n >= 2) {
      const auto three_a = a.scaled(3);
      EXPECT_EQ(three_a.exact_div3().scaled(3), three_a.at_precision(n - 1));
      EXPECT_EQ(three_a.exact_div3(), a.at_precision(n - 1));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Precisions, GaloisIntProperties, ::testing::Values(1, 2, 12, 24, 37, 40));

}  // namespace
}  // namespace morava
