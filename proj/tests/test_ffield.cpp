#include <gtest/gtest.h>

#include <sstream>

#include "reference.hpp"
#include "ud4/config.hpp"
#include "ud4/ffield.hpp"

using namespace ud4;

namespace {

ref::Field reference_for(const FieldCtx& F) { return {F.p(), F.defining_poly()}; }

}  // namespace

TEST(Field, PrimeFieldBasics) {
  const auto F = FieldCtx::make(3, 1);
  EXPECT_EQ(F->q(), 3u);
  EXPECT_EQ(F->inv(Fq{2}), Fq{2});
  EXPECT_EQ(F->a_phi(Fq{2}), Fq{2});
  EXPECT_EQ(F->neg(Fq{1}), Fq{2});
  EXPECT_THROW(F->inv(kZero), FieldError);
}

TEST(Field, F4FromDefaultPolynomial) {
  const auto F = FieldCtx::make(2, 2);
  EXPECT_EQ(F->defining_poly(), (std::vector<std::uint32_t>{1, 1, 1}));
  const Fq g = F->generator();
  EXPECT_EQ(F->mul(g, g), F->add(g, kOne));
  EXPECT_EQ(F->trace(g), 1u);
  EXPECT_EQ(F->a_phi(g), g);
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(FieldCtx::make(4, 1), FieldError);
  EXPECT_THROW(FieldCtx::make(2, 0), FieldError);
  EXPECT_THROW(FieldCtx::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), FieldError);
  EXPECT_THROW(FieldCtx::make(2, 2, std::vector<std::uint32_t>{1, 1}), FieldError);
  EXPECT_THROW(FieldCtx::make(101, 2), FieldError);
}

TEST(Field, IrreducibleQuadraticOverF2IsUnique) {
  int n = 0;
  for (std::uint32_t c0 = 0; c0 < 2; ++c0)
    for (std::uint32_t c1 = 0; c1 < 2; ++c1) n += is_irreducible(2, {c0, c1, 1});
  EXPECT_EQ(n, 1);
  EXPECT_TRUE(is_irreducible(2, {1, 1, 1}));
}

TEST(Field, NonimagePick) {
  const auto F2 = FieldCtx::make(2, 1);
  auto art = [](const FieldCtx& F) { return [&F](Fq t) { return F.add(F.mul(t, t), t); }; };
  EXPECT_EQ(F2->nonimage_pick(art(*F2)), kOne);
  const auto F4 = FieldCtx::make(2, 2);
  const Fq pick = F4->nonimage_pick(art(*F4));
  EXPECT_EQ(pick, Fq{2});
  EXPECT_THROW(FieldCtx::make(3, 1)->nonimage_pick([](Fq t) { return t; }), FieldError);
}

class FieldAgainstReference : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldAgainstReference, ArithmeticAndTrace) {
  const auto [p, a] = GetParam();
  const auto F = FieldCtx::make(p, a);
  const auto R = reference_for(*F);
  for (std::uint32_t x = 0; x < F->q(); ++x) {
    EXPECT_EQ(F->trace(Fq{x}), R.trace(x));
    for (std::uint32_t y = 0; y < F->q(); ++y) {
      ASSERT_EQ(F->add(Fq{x}, Fq{y}).v, R.add(x, y));
      ASSERT_EQ(F->mul(Fq{x}, Fq{y}).v, R.mul(x, y));
    }
    if (x != 0) {
      EXPECT_EQ(F->mul(Fq{x}, F->inv(Fq{x})), kOne);
      EXPECT_EQ(F->mul(F->a_phi(Fq{x}), F->pow(Fq{x}, p)), kOne);
    }
  }
}

TEST_P(FieldAgainstReference, SquaresAreHalfTheUnits) {
  const auto [p, a] = GetParam();
  const auto F = FieldCtx::make(p, a);
  if (p == 2) GTEST_SKIP();
  int n = 0;
  for (std::uint32_t x = 1; x < F->q(); ++x) {
    bool sq = false;
    for (std::uint32_t y = 1; y < F->q() && !sq; ++y) sq = F->mul(Fq{y}, Fq{y}) == Fq{x};
    EXPECT_EQ(F->is_square(Fq{x}), sq);
    n += sq;
  }
  EXPECT_EQ(2 * n, static_cast<int>(F->q() - 1));
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAgainstReference,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{2u, 6u}, std::pair{3u, 1u}, std::pair{3u, 2u},
                                           std::pair{5u, 1u}, std::pair{5u, 2u}, std::pair{7u, 1u}));

TEST(FieldElement, ValueSemantics) {
  const auto F = FieldCtx::make(5, 1);
  const FieldElement x(F, 2u), y(F, 4u);
  EXPECT_EQ((x + y).index(), 1u);
  EXPECT_EQ((x * y).index(), 3u);
  EXPECT_EQ((x / y * y), x);
  EXPECT_EQ((-x).index(), 3u);
  const auto G = FieldCtx::make(5, 1);
  EXPECT_THROW(x + FieldElement(G, 1u), FieldError);
  EXPECT_THROW(FieldElement(F, 7u), FieldError);
}

TEST(Config, PinsPolynomial) {
  std::istringstream in("# comment\npoly.3.2 = 2 2 1   # x^2+2x+2\n\n");
  const Config cfg = Config::parse(in);
  const auto F = cfg.make_field(3, 2);
  EXPECT_EQ(F->defining_poly(), (std::vector<std::uint32_t>{2, 2, 1}));
  EXPECT_EQ(cfg.make_field(3, 1)->defining_poly(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Config, RejectsTypos) {
  std::istringstream bad_key("polly.3.2 = 2 2 1\n");
  EXPECT_THROW(Config::parse(bad_key), ConfigError);
  std::istringstream bad_value("poly.3.2 = 2 x 1\n");
  EXPECT_THROW(Config::parse(bad_value), ConfigError);
  std::istringstream reducible("poly.3.2 = 2 0 1\n");
  const Config cfg = Config::parse(reducible);
  EXPECT_NO_THROW(cfg.make_field(3, 1));
  EXPECT_THROW(cfg.make_field(3, 2), FieldError);
}
