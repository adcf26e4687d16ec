#include <gtest/gtest.h>

#include <map>
#include <random>

#include "ud4/characters.hpp"

using namespace ud4;

namespace {

std::map<std::string, std::size_t> counts_by_family(const FieldCtx& F) {
  std::map<std::string, std::size_t> n;
  for (const auto& l : enumerate_chars(F)) ++n[l.family];
  return n;
}

std::uint64_t ipow(std::uint64_t q, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

}  // namespace

TEST(Characters, FamilySizes) {
  const auto F3 = FieldCtx::make(3, 1);
  auto n3 = counts_by_family(*F3);
  EXPECT_EQ(n3["Flin"], 81u);
  EXPECT_EQ(n3["F89q2"], 36u);
  const auto F2 = FieldCtx::make(2, 1);
  auto n2 = counts_by_family(*F2);
  EXPECT_EQ(n2["F8910q3"] + n2["F8910q3/2"], 5u);
  EXPECT_EQ(n2.count("F8910"), 0u);
}

class CharacterFamilies : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(CharacterFamilies, CountsMatchFormulas) {
  const auto [p, a] = GetParam();
  const auto F = FieldCtx::make(p, a);
  auto n = counts_by_family(*F);
  const mpz_class q = F->q();
  for (const auto& f : char_families(p)) EXPECT_EQ(mpz_class(static_cast<unsigned long>(n[f.name])), f.count(q)) << f.name;
}

TEST_P(CharacterFamilies, ValueAtIdentityIsDegree) {
  const auto [p, a] = GetParam();
  const auto F = FieldCtx::make(p, a);
  const UGroup G(F);
  CharEvaluator ev(G);
  for (const auto& l : enumerate_chars(*F)) {
    const std::uint64_t d = degree(l);
    EXPECT_EQ(d, l.degree);
    for (const auto& f : char_families(p)) {
      if (f.name == l.family) EXPECT_EQ(d, f.half_degree ? ipow(F->q(), f.degree_exp) / 2 : ipow(F->q(), f.degree_exp));
    }
    ASSERT_EQ(ev.value(l, G.identity()), CycInt::integer(p, static_cast<i128>(d))) << l.to_string();
  }
}

TEST_P(CharacterFamilies, LabelsRoundTrip) {
  const auto [p, a] = GetParam();
  const auto F = FieldCtx::make(p, a);
  const auto labels = enumerate_chars(*F);
  for (std::size_t i = 0; i < labels.size(); i += 7) EXPECT_EQ(parse_label(*F, labels[i].to_string()), labels[i]);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, CharacterFamilies,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u},
                                           std::pair{2u, 3u}));

TEST(Characters, Degrees) {
  const auto F4 = FieldCtx::make(2, 2);
  for (const auto& l : enumerate_chars(*F4)) {
    if (l.family == "F8910q3/2") EXPECT_EQ(degree(l), 32u);
    if (l.family == "F12") EXPECT_EQ(degree(l), 256u);
    if (l.family == "Flin") EXPECT_EQ(degree(l), 1u);
  }
  const auto F5 = FieldCtx::make(5, 1);
  for (const auto& l : enumerate_chars(*F5)) {
    const auto d = degree(l);
    EXPECT_TRUE(d == 1 || d == 5 || d == 25 || d == 125 || d == 625) << l.to_string();
  }
}

TEST(Characters, LinearCharacters) {
  const auto F = FieldCtx::make(5, 1);
  const UGroup G(F);
  CharEvaluator ev(G);
  std::mt19937_64 rng(3);
  const CharLabel l = parse_label(*F, "Flin[b1=1,b2=2,b3=3,b4=4]");
  for (int i = 0; i < 200; ++i) {
    std::array<Fq, kNumRoots> t{};
    for (auto& c : t) c = Fq{static_cast<std::uint32_t>(rng() % 5)};
    const UElement x = G.from_coords(t);
    const std::uint32_t arg = (1 * x.t(1).v + 2 * x.t(2).v + 3 * x.t(3).v + 4 * x.t(4).v) % 5;
    EXPECT_EQ(ev.value(l, x), CycInt::zeta_pow(5, arg));
  }
}

TEST(Characters, Family8910AtX3) {
  const auto F = FieldCtx::make(3, 1);
  const UGroup G(F);
  CharEvaluator ev(G);
  const CharLabel l = parse_label(*F, "F8910[a8=1,a9=1,a10=1,b3=1]");
  // q phi(b3 t3) sum_t phi(-a8 a9 a10 t3 t^2), summed here term by term.
  CycInt gauss(3);
  for (std::uint32_t t = 0; t < 3; ++t) gauss.add_zeta(-static_cast<std::int64_t>(t * t), 1);
  EXPECT_EQ(gauss, CycInt(3, {-1, -2}));
  const CycInt expect = (CycInt::zeta_pow(3, 1) * gauss).scale(3);
  SumNote note;
  EXPECT_EQ(ev.value(l, G.root_elem(3, kOne), &note), expect);
  EXPECT_EQ(note.kind, "gauss");
}

TEST(Characters, Family567AtIdentity) {
  const auto F = FieldCtx::make(5, 1);
  const UGroup G(F);
  CharEvaluator ev(G);
  for (const auto& l : enumerate_chars(*F))
    if (l.family == "F567") ASSERT_EQ(ev.value(l, G.identity()), CycInt::integer(5, 5));
}

TEST(Characters, ParseErrors) {
  const auto F = FieldCtx::make(3, 1);
  EXPECT_THROW(parse_label(*F, "F11[a11=0,b5=0,b6=0,b7=0,b3=0]"), CharError);
  EXPECT_THROW(parse_label(*F, "F11[a11=1]"), CharError);
  EXPECT_THROW(parse_label(*F, "F99[a1=1]"), CharError);
  EXPECT_THROW(parse_label(*F, "F11 a11=1"), CharError);
  EXPECT_THROW(parse_label(*F, "F89q2[a8=1,a9=1,b2=1,b3=0,b4=1]"), CharError);
  EXPECT_NO_THROW(parse_label(*F, " F11[a11=1, b5=0, b6=2, b7=0, b3=1] "));
}

TEST(Characters, Transport) {
  const auto F = FieldCtx::make(5, 1);
  const GraphAuto tau = GraphAuto::tau();
  const CharLabel l8 = parse_label(*F, "F8q3[a8=2,a7=3]");
  const CharLabel l9 = transport_char(*F, tau, l8);
  EXPECT_EQ(l9.family, "F9q3");
  EXPECT_EQ(param(l9.params, "a9"), Fq{2});
  EXPECT_EQ(param(l9.params, "a6"), Fq{3});
  for (const auto& l : enumerate_chars(*F)) EXPECT_EQ(transport_char(*F, GraphAuto::identity(), l), l);

  const CharLabel l11 = parse_label(*F, "F11[a11=1,b5=1,b6=2,b7=3,b3=4]");
  const CharLabel t11 = transport_char(*F, tau, l11);
  EXPECT_EQ(t11.family, "F11");
  EXPECT_EQ(param(t11.params, "b7"), Fq{1});
  EXPECT_EQ(param(t11.params, "b5"), Fq{2});
  EXPECT_EQ(param(t11.params, "b6"), Fq{3});

  const auto F3 = FieldCtx::make(3, 1);
  const auto labels3 = enumerate_chars(*F3);
  for (const auto& l : labels3)
    if (l.family == "F567") EXPECT_THROW(transport_char(*F3, tau, l), CharError);
  const auto F2 = FieldCtx::make(2, 1);
  EXPECT_THROW(transport_char(*F2, tau, enumerate_chars(*F2).front()), CharError);
}

TEST(Characters, TransportedValuesAgreeAtQ5) {
  const auto F = FieldCtx::make(5, 1);
  const UGroup G(F);
  CharEvaluator ev(G);
  std::mt19937_64 rng(5);
  const auto labels = enumerate_chars(*F);
  const GraphAuto tau = GraphAuto::tau();
  int checked = 0;
  for (const auto& l : labels) {
    if (l.family != "F8q3" && l.family != "F89q2" && l.family != "F567" && l.family != "Flin") continue;
    const CharLabel m = transport_char(*F, tau, l);
    for (int i = 0; i < 3; ++i) {
      std::array<Fq, kNumRoots> t{};
      for (auto& c : t) c = Fq{static_cast<std::uint32_t>(rng() % 5)};
      const UElement x = G.from_coords(t);
      ASSERT_EQ(ev.value(l, x), ev.value(m, G.apply_auto(tau, x))) << l.to_string();
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Characters, UncoveredShapeIsReported) {
  const auto F = FieldCtx::make(3, 1);
  const UGroup G(F);
  CharEvaluator ev(G);
  const CharLabel l = parse_label(*F, "F12[a12=1,b1=0,b2=0,b4=0]");
  std::mt19937_64 rng(9);
  int uncovered = 0;
  for (int i = 0; i < 200; ++i) {
    std::array<Fq, kNumRoots> t{};
    for (auto& c : t) c = Fq{static_cast<std::uint32_t>(rng() % 3)};
    try {
      ev.value(l, G.from_coords(t));
    } catch (const ShapeError&) {
      ++uncovered;
    }
  }
  EXPECT_GT(uncovered, 0);
}
