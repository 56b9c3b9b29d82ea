#include "morava/series.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "morava/formulas.hpp"
#include "morava/matrix.hpp"
#include "morava/verify.hpp"

namespace morava {
namespace {

const PrecisionProfile kDefault(24, 16);
const PrecisionProfile kSmall(12, 10);

DeformationElement poly(std::initializer_list<std::int64_t> c, PrecisionProfile prof = kDefault) {
  return DeformationElement::from_integers(c, prof);
}

// Schoolbook product through GaloisInt, independent of the batched kernel.
DeformationElement naive_product(const DeformationElement& x, const DeformationElement& y) {
  const int m = x.length();
  const int p = std::min(x.eff_p(), y.eff_p());
  std::vector<GaloisInt> out(static_cast<std::size_t>(m), GaloisInt(0, 0, p));
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j < m; ++j) out[static_cast<std::size_t>(i + j)] += x.coeff(i) * y.coeff(j);
  return DeformationElement(x.profile(), out);
}

TEST(SeriesTest, TruncatesAtDegreeBound) {
  const auto h = DeformationElement::h(kDefault);
  EXPECT_TRUE((h * h.pow(15)).is_zero());
  EXPECT_FALSE(h.pow(15).is_zero());
}

TEST(SeriesTest, BasicProducts) {
  const auto one = DeformationElement::integer(1, kDefault);
  const auto x = poly({4, -7, 0, 11});
  EXPECT_EQ(one * x, x);
  EXPECT_EQ(poly({1, 1}) * poly({1, -1}), poly({1, 0, -1}));
}

TEST(SeriesTest, ConvolutionMatchesSchoolbook) {
  for (const PrecisionProfile prof : {PrecisionProfile(12, 10), PrecisionProfile(24, 16), PrecisionProfile(40, 20)}) {
    ElementSampler s(99);
    for (int t = 0; t < 50; ++t) {
      const auto x = s.element(prof, prof.h_deg - 1);
      const auto y = s.element(prof, prof.h_deg - 1);
      EXPECT_EQ(x * y, naive_product(x, y));
    }
  }
}

TEST(SeriesTest, InvertExamples) {
  const auto h_minus_17 = poly({-17, 1});
  const auto inv = invert(h_minus_17);
  EXPECT_EQ(inv * h_minus_17, DeformationElement::integer(1, kDefault));

  std::vector<GaloisInt> ones(16, GaloisInt::integer(1, 24));
  EXPECT_EQ(invert(poly({1, -1})), DeformationElement(kDefault, ones));

  EXPECT_THROW(invert(DeformationElement::h(kDefault)), NotAUnit);
  EXPECT_THROW(invert(poly({3, 1})), NotAUnit);
}

TEST(SeriesTest, InvertRandomUnits) {
  ElementSampler s(2024);
  const auto one = DeformationElement::integer(1, kSmall);
  for (int t = 0; t < 100; ++t) {
    const auto x = s.unit(kSmall, kSmall.h_deg - 1);
    EXPECT_EQ(x * invert(x), one);
  }
}

// sqrt(1 - h) = 1 - 2 sum_{k>=1} Catalan(k-1) (h/4)^k.
TEST(SeriesTest, SqrtOfOneMinusHMatchesCatalanExpansion) {
  const auto s = sqrt(poly({1, -1}), GaloisInt::integer(1, 24));
  EXPECT_EQ(s * s, poly({1, -1}));
  const auto inv4 = GaloisInt::integer(4, 24).inverse();
  std::int64_t catalan = 1;  // Catalan(k-1)
  GaloisInt inv4k = GaloisInt::integer(1, 24);
  EXPECT_EQ(s.coeff(0), GaloisInt::integer(1, 24));
  for (int k = 1; k < 16; ++k) {
    inv4k *= inv4;
    EXPECT_EQ(s.coeff(k), GaloisInt::integer(-2 * catalan, 24) * inv4k) << "k = " << k;
    catalan = catalan * 2 * (2 * k - 1) / (k + 1);
  }
}

TEST(SeriesTest, SqrtErrors) {
  EXPECT_EQ(sqrt(DeformationElement::integer(1, kDefault), GaloisInt::integer(1, 24)),
            DeformationElement::integer(1, kDefault));
  EXPECT_THROW(sqrt(DeformationElement::h(kDefault), GaloisInt::integer(1, 24)), NotAUnit);
  EXPECT_THROW(sqrt(poly({1, -1}), GaloisInt::integer(2, 24)), BadBranch);
}

TEST(SeriesTest, SqrtRandomSquares) {
  ElementSampler s(77);
  for (int t = 0; t < 100; ++t) {
    const auto root = s.unit(kSmall, kSmall.h_deg - 1);
    const auto x = root * root;
    const auto r = sqrt(x, root.constant_term());
    EXPECT_EQ(r * r, x);
    EXPECT_EQ(r, root);
  }
}

TEST(SeriesTest, ConstructionOfC) {
  for (const PrecisionProfile prof : {PrecisionProfile(2, 1), PrecisionProfile(2, 5), kSmall, kDefault}) {
    const auto c = make_c(prof);
    EXPECT_EQ(c * c, DeformationElement::from_integers({-1, 1}, prof));
    EXPECT_EQ(c.coeff(0), GaloisInt::unit_i(prof.p_exp));
  }
  const auto c = make_c(kDefault);
  EXPECT_EQ(c.coeff(0).re() % 3, 0u);
  EXPECT_EQ(c.coeff(0).im() % 3, 1u);
  // every coefficient of i * sqrt(1 - h) is purely imaginary
  EXPECT_EQ(c.frobenius(), -c);
}

TEST(SeriesTest, Frobenius) {
  const auto h = DeformationElement::h(kDefault);
  EXPECT_EQ(h.frobenius(), h);
  const auto ih2 = DeformationElement::monomial(GaloisInt::unit_i(24), 2, kDefault);
  EXPECT_EQ(ih2.frobenius(), -ih2);
}

TEST(SeriesTest, ExactDivisionTracksPrecision) {
  const auto x = poly({3, 6, 9});
  const auto q = x.exact_div3();
  EXPECT_EQ(q.eff_p(), 23);
  EXPECT_EQ(q, poly({1, 2, 3}).at_precision(23));
  EXPECT_EQ((q + poly({5})).eff_p(), 23);
  EXPECT_THROW(poly({1, 3}).exact_div3(), NotDivisibleBy3);
}

TEST(SeriesTest, SubstituteIntoB) {
  const auto b = build_B(kDefault);
  const auto h = DeformationElement::h(kDefault);
  EXPECT_EQ(subst_series(h, b, Twist::kFrobenius), b);
  EXPECT_EQ(subst_series(h * h, b, Twist::kNone), b * b);
  const auto i = DeformationElement::i(kDefault);
  EXPECT_EQ(subst_series(i, b, Twist::kFrobenius), GaloisInt(0, -1, 24) * MatrixE0::identity(8, kDefault));
  EXPECT_EQ(subst_series(i, b, Twist::kNone), GaloisInt(0, 1, 24) * MatrixE0::identity(8, kDefault));
}

// deg x + deg y < M keeps the product untruncated, so the substitution must
// be multiplicative exactly.
TEST(SeriesTest, TwistedSubstitutionIsMultiplicative) {
  const auto b = build_B(kSmall);
  ElementSampler s(5);
  for (int t = 0; t < 20; ++t) {
    const auto x = s.element(kSmall, 4);
    const auto y = s.element(kSmall, 4);
    EXPECT_EQ(subst_series(x * y, b, Twist::kFrobenius),
              subst_series(x, b, Twist::kFrobenius) * subst_series(y, b, Twist::kFrobenius));
    EXPECT_EQ(subst_series(x + y, b, Twist::kFrobenius),
              subst_series(x, b, Twist::kFrobenius) + subst_series(y, b, Twist::kFrobenius));
  }
}

TEST(SeriesTest, SubstitutingHIsIdentity) {
  ElementSampler s(6);
  const auto h = DeformationElement::h(kSmall);
  for (int t = 0; t < 20; ++t) {
    const auto x = s.element(kSmall, kSmall.h_deg - 1);
    EXPECT_EQ(subst_series(x, h, Twist::kNone), x);
    EXPECT_EQ(subst_series(x, h, Twist::kFrobenius), x.frobenius());
  }
}

TEST(SeriesTest, NonNilpotentTargetsDoNotConverge) {
  const auto id = MatrixE0::identity(3, kSmall);
  EXPECT_THROW(subst_series(DeformationElement::h(kSmall), id, Twist::kNone), NoConvergence);
  EXPECT_THROW(vanishing_power(id, kSmall), NoConvergence);
  EXPECT_THROW(subst_series(DeformationElement::h(kSmall), DeformationElement::integer(1, kSmall), Twist::kNone),
               NoConvergence);
}

TEST(SeriesTest, VanishingPowerOfShiftAndScalars) {
  auto shift = MatrixE0::zero(4, kSmall);
  for (int r = 1; r < 4; ++r) shift.at(r, r - 1) = DeformationElement::integer(1, kSmall);
  EXPECT_EQ(vanishing_power(shift, kSmall), 4);
  // 3 vanishes at the N-th power, h at the M-th
  EXPECT_EQ(vanishing_power(DeformationElement::integer(3, kSmall), kSmall), 12);
  EXPECT_EQ(vanishing_power(DeformationElement::h(kSmall), kSmall), 10);
}

}  // namespace
}  // namespace morava
