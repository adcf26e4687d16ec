#include <gtest/gtest.h>

#include <cmath>

#include "reference.hpp"
#include "ud4/cyclotomic.hpp"
#include "ud4/table.hpp"

using namespace ud4;

namespace {

CycInt cyc(std::uint32_t p, std::vector<i128> c) { return CycInt(p, std::move(c)); }

void expect_near(const CycInt& x, std::complex<double> z) {
  const auto w = x.to_complex();
  EXPECT_NEAR(w.real(), z.real(), 1e-9);
  EXPECT_NEAR(w.imag(), z.imag(), 1e-9);
}

}  // namespace

TEST(Cyclotomic, ZetaPowers) {
  EXPECT_EQ(CycInt::zeta_pow(3, 0), cyc(3, {1, 0}));
  EXPECT_EQ(CycInt::zeta_pow(3, 2), cyc(3, {-1, -1}));
  EXPECT_EQ(CycInt::zeta_pow(3, -1), cyc(3, {-1, -1}));
  EXPECT_EQ(CycInt::zeta_pow(2, 1), cyc(2, {-1}));
  EXPECT_EQ(CycInt::zeta_pow(5, 7), CycInt::zeta_pow(5, 2));
}

TEST(Cyclotomic, RingOperations) {
  const CycInt z = CycInt::zeta_pow(3, 1);
  EXPECT_EQ(z.conj(), cyc(3, {-1, -1}));
  const CycInt g = cyc(3, {1, 2});
  EXPECT_EQ(g * g.conj(), CycInt::integer(3, 3));
  EXPECT_EQ(CycInt::one(2).scale(8), CycInt::integer(2, 8));
  EXPECT_EQ(z * z * z, CycInt::one(3));
  EXPECT_THROW(z + CycInt::one(5), CyclotomicError);
  EXPECT_EQ((g - g), CycInt::zero(3));
  EXPECT_EQ(-g + g, CycInt::zero(3));
  EXPECT_EQ(g.to_string(), "1+2z");
  EXPECT_EQ(cyc(5, {0, -1, 0, 3}).to_string(), "-z+3z^3");
  EXPECT_EQ(CycInt::zero(7).to_string(), "0");
}

TEST(Cyclotomic, ProductMatchesComplexProduct) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const std::size_t d = CycInt::dim(p);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<i128> u(d), v(d);
      for (std::size_t k = 0; k < d; ++k) {
        u[k] = (trial * 7 + static_cast<int>(k) * 3) % 11 - 5;
        v[k] = (trial * 5 + static_cast<int>(k) * 2) % 9 - 4;
      }
      const CycInt x(p, u), y(p, v);
      expect_near(x * y, x.to_complex() * y.to_complex());
      expect_near(x.conj(), std::conj(x.to_complex()));
    }
  }
}

TEST(Cyclotomic, ComplexRendering) {
  expect_near(cyc(3, {1, 2}), {0.0, std::sqrt(3.0)});
  expect_near(CycInt::integer(2, -1), {-1.0, 0.0});
  expect_near(CycInt::zero(5), {0.0, 0.0});
  EXPECT_EQ(format_float(cyc(3, {1, 2})), "0+1.7320508i");
}

TEST(Phi, IsACharacterOfTheAdditiveGroup) {
  for (auto [p, a] : {std::pair{2u, 1u}, std::pair{2u, 3u}, std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{5u, 1u},
                      std::pair{2u, 6u}}) {
    const auto F = FieldCtx::make(p, a);
    CycInt total(p);
    for (std::uint32_t x = 0; x < F->q(); ++x) {
      total += phi(*F, Fq{x});
      for (std::uint32_t y = 0; y < F->q(); ++y)
        ASSERT_EQ(phi(*F, F->add(Fq{x}, Fq{y})), phi(*F, Fq{x}) * phi(*F, Fq{y}));
    }
    EXPECT_TRUE(total.is_zero());
    EXPECT_EQ(phi(*F, kZero), CycInt::one(p));
  }
  const auto F4 = FieldCtx::make(2, 2);
  EXPECT_EQ(from_phi(FieldElement(F4, F4->generator())), CycInt::integer(2, -1));
}

TEST(ExponentialSums, Examples) {
  const auto F2 = FieldCtx::make(2, 1);
  const auto F3 = FieldCtx::make(3, 1);
  const auto F5 = FieldCtx::make(5, 1);
  auto el = [](const FieldPtr& F, std::uint32_t i) { return FieldElement(F, i); };

  EXPECT_EQ(gauss_quadratic(el(F3, 1)), cyc(3, {1, 2}));
  EXPECT_EQ(gauss_quadratic(el(F5, 0)), CycInt::integer(5, 5));
  EXPECT_EQ(gauss_quadratic(el(F2, 1)), CycInt::zero(2));

  EXPECT_EQ(kloosterman(el(F5, 0), el(F5, 0)), CycInt::integer(5, 4));
  EXPECT_EQ(kloosterman(el(F5, 3), el(F5, 0)), CycInt::integer(5, -1));
  // s = 1 contributes phi(2), s = 2 contributes phi(1).
  EXPECT_EQ(kloosterman(el(F3, 1), el(F3, 1)), CycInt::integer(3, -1));

  EXPECT_EQ(quad_linear_sum(el(F5, 0), el(F5, 0)), CycInt::integer(5, 5));
  EXPECT_EQ(quad_linear_sum(el(F2, 1), el(F2, 0)), CycInt::zero(2));
  EXPECT_EQ(quad_linear_sum(el(F2, 1), el(F2, 1)), CycInt::integer(2, 2));
}

TEST(ExponentialSums, AgreeWithReferenceSummation) {
  for (auto [p, a] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{7u, 1u}}) {
    const auto F = FieldCtx::make(p, a);
    const ref::Field R{p, F->defining_poly()};
    ExpSums sums(F);
    for (std::uint32_t A = 0; A < F->q(); ++A) {
      expect_near(sums.gauss(Fq{A}), ref::exp_sum(R, false, [&](std::uint32_t t) { return R.mul(A, R.mul(t, t)); }));
      for (std::uint32_t B = 0; B < F->q(); ++B) {
        std::uint32_t binv = 0;
        const auto kl = ref::exp_sum(R, true, [&](std::uint32_t s) {
          for (binv = 1; R.mul(binv, s) != 1; ++binv) {
          }
          return R.add(R.mul(A, s), R.mul(B, binv));
        });
        expect_near(sums.kloosterman(Fq{A}, Fq{B}), kl);
        expect_near(sums.quad_linear(Fq{A}, Fq{B}),
                    ref::exp_sum(R, false, [&](std::uint32_t s) { return R.add(R.mul(A, R.mul(s, s)), R.mul(B, s)); }));
      }
    }
  }
}

TEST(ExponentialSums, GaussSumNormAndSign) {
  for (auto [p, a] : {std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{5u, 2u}, std::pair{7u, 1u},
                      std::pair{3u, 4u}}) {
    const auto F = FieldCtx::make(p, a);
    ExpSums sums(F);
    const CycInt g1 = sums.gauss(kOne);
    for (std::uint32_t c = 1; c < F->q(); ++c) {
      const CycInt& g = sums.gauss(Fq{c});
      EXPECT_EQ(g * g.conj(), CycInt::integer(p, F->q()));
      EXPECT_EQ(g, F->is_square(Fq{c}) ? g1 : -g1);
    }
  }
}

TEST(Accumulator, SpillsToBigIntegers) {
  CycAccumulator acc(3);
  const CycInt big = CycInt::integer(3, i128(1) << 62);
  for (int i = 0; i < 64; ++i) acc.add_product(big, big, i128(1) << 40);
  const mpz_class expect = mpz_class(64) * (mpz_class(1) << 164);
  EXPECT_EQ(acc.value().coeffs()[0], expect);
  EXPECT_EQ(acc.value().coeffs()[1], 0);
}

TEST(CycRational, Normalizes) {
  const CycRational r(to_big(CycInt::integer(3, 6)), -4);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "(-3)/2");
  EXPECT_FALSE(r.is_integer());
  EXPECT_TRUE(CycRational(to_big(CycInt::integer(5, 8)), 8).equals_integer(1));
  EXPECT_THROW(CycRational(to_big(CycInt::one(3)), 0), CyclotomicError);
}
