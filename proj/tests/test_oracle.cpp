#include <gtest/gtest.h>

#include <map>

#include "ud4/classes.hpp"
#include "ud4/oracle.hpp"

using namespace ud4;

namespace {

// Trivial subgroup with the trivial character, induced to U/M_5.
Construction regular(const UGroup& G) {
  Construction c;
  c.description = "regular";
  c.level = 5;
  const std::uint32_t p = G.field().p();
  c.lambda = [p](const UElement& x) -> std::optional<CycInt> {
    if (!x.is_identity()) return std::nullopt;
    return CycInt::one(p);
  };
  c.transversal_roots = {3, 1, 2, 4};
  return c;
}

// All of U/M_5 with the trivial character.
Construction trivial(const UGroup& G) {
  Construction c;
  c.description = "trivial";
  c.level = 5;
  for (int r : {3, 1, 2, 4})
    for (std::uint32_t s = 1; s < G.field().q(); ++s) c.generators.push_back(G.root_elem(r, Fq{s}));
  const std::uint32_t p = G.field().p();
  c.lambda = [p](const UElement&) -> std::optional<CycInt> { return CycInt::one(p); };
  return c;
}

}  // namespace

TEST(GroupTable, Sizes) {
  const UGroup G2(FieldCtx::make(2, 1));
  EXPECT_EQ(GroupTable(G2, 5).size(), 16u);
  EXPECT_EQ(GroupTable(G2, 12).size(), 2048u);
  const UGroup G3(FieldCtx::make(3, 1));
  EXPECT_EQ(GroupTable(G3, 13).size(), 531441u);
  EXPECT_THROW(GroupTable(G3, 13, 1000), OracleError);
  const GroupTable t(G3, 9);
  for (std::uint64_t i = 0; i < t.size(); i += 97) EXPECT_EQ(t.index(t.element(i)), i);
}

TEST(OrbitClasses, SmallQuotients) {
  const UGroup G(FieldCtx::make(2, 1));
  const GroupTable tbl(G, 13);
  const auto part = orbit_classes(tbl);
  std::uint64_t total = 0;
  for (auto s : part.size) total += s;
  EXPECT_EQ(total, 4096u);
  const auto central = part.class_of[tbl.index(G.root_elem(12, kOne))];
  EXPECT_EQ(part.size[central], 1u);
  std::size_t listed = 0;
  for (const auto& [name, n] : family_counts(G)) listed += n.get_ui();
  EXPECT_EQ(part.count(), listed);

  // U/M_5 is elementary abelian of order 16.
  const auto ab = orbit_classes(GroupTable(G, 5));
  EXPECT_EQ(ab.count(), 16u);
}

TEST(OrbitClasses, CentralizerOfX3AtQ3) {
  const UGroup G(FieldCtx::make(3, 1));
  const GroupTable tbl(G, 13);
  const auto part = orbit_classes(tbl);
  EXPECT_EQ(part.size[part.class_of[tbl.index(G.root_elem(3, kOne))]], 81u);
}

TEST(Induction, RegularAndTrivial) {
  const UGroup G(FieldCtx::make(2, 1));
  const InducedCharacter reg(G, regular(G));
  EXPECT_EQ(reg.subgroup_order(), 1u);
  EXPECT_EQ(reg.value(G.identity()), CycInt::integer(2, 16));
  EXPECT_EQ(reg.value(G.root_elem(3, kOne)), CycInt::zero(2));
  // Coordinates inside M_5 are ignored.
  EXPECT_EQ(reg.value(G.root_elem(9, kOne)), CycInt::integer(2, 16));

  const InducedCharacter triv(G, trivial(G));
  EXPECT_EQ(triv.subgroup_order(), 16u);
  EXPECT_EQ(triv.value(G.root_elem(2, kOne)), CycInt::one(2));

  const GroupTable tbl(G, 5);
  const auto part = orbit_classes(tbl);
  std::vector<CycInt> r, t;
  std::vector<mpz_class> sizes;
  for (std::size_t c = 0; c < part.count(); ++c) {
    const UElement x = tbl.element(part.representative[c]);
    r.push_back(reg.value(x));
    t.push_back(triv.value(x));
    sizes.push_back(static_cast<unsigned long>(part.size[c]));
  }
  EXPECT_TRUE(inner_product(r, t, sizes, 16).equals_integer(1));
  EXPECT_TRUE(inner_product(t, t, sizes, 16).equals_integer(1));
  EXPECT_TRUE(inner_product(r, r, sizes, 16).equals_integer(16));
}

TEST(Induction, RejectsBadConstructions) {
  const UGroup G(FieldCtx::make(3, 1));
  Construction c = trivial(G);
  c.lambda = [](const UElement& x) -> std::optional<CycInt> {
    return x.t(3) == kOne ? CycInt::zeta_pow(3, 1) : CycInt::one(3);
  };
  EXPECT_THROW(InducedCharacter(G, c), OracleError);

  Construction short_x = regular(G);
  short_x.transversal_roots = {3, 1, 2};
  EXPECT_THROW(InducedCharacter(G, short_x), OracleError);
}

TEST(Induction, TopFamilyDegreeAtQ2) {
  const auto F = FieldCtx::make(2, 1);
  const UGroup G(F);
  for (const auto& l : enumerate_chars(*F)) {
    if (l.family != "F12") continue;
    const InducedCharacter ind(G, construction_for(G, l));
    EXPECT_EQ(ind.value(G.identity()), CycInt::integer(2, 16));
  }
}

TEST(Induction, AgreesWithFormulasOnRepsAtQ2) {
  const auto F = FieldCtx::make(2, 1);
  const UGroup G(F);
  CharEvaluator ev(G);
  const auto reps = enumerate_class_reps(G);
  for (const auto& l : enumerate_chars(*F)) {
    const auto values = induce_linear(G, construction_for(G, l), [&] {
      std::vector<UElement> at;
      for (const auto& r : reps) at.push_back(r.rep);
      return at;
    }());
    for (std::size_t j = 0; j < reps.size(); ++j)
      ASSERT_EQ(values[j], ev.value(l, reps[j].rep)) << l.to_string() << " at " << G.format(reps[j].rep);
  }
}

TEST(Certification, FullAtQ2) {
  const UGroup G(FieldCtx::make(2, 1));
  const OracleReport r = certify_with_oracle(G);
  EXPECT_TRUE(r.classes_ok);
  EXPECT_TRUE(r.characters_ok);
  EXPECT_TRUE(r.irreducible_ok);
  EXPECT_EQ(r.group_order, 4096u);
  EXPECT_EQ(r.oracle_classes, r.listed_classes);
  EXPECT_TRUE(r.problems.empty());
  EXPECT_EQ(r.cells_checked, r.listed_classes * r.listed_classes);
}

TEST(Certification, RefusesLargeGroups) {
  const UGroup G(FieldCtx::make(2, 2));
  EXPECT_THROW(certify_with_oracle(G), OracleError);
}

TEST(Induction, FamilyElevenAtQ4) {
  const auto F = FieldCtx::make(2, 2);
  const UGroup G(F);
  CharEvaluator ev(G);
  const CharLabel l = parse_label(*F, "F11[a11=1,b5=0,b6=2,b7=0,b3=1]");
  const InducedCharacter ind(G, construction_for(G, l));
  const UElement x = G.parse("x3(1)*x8(2)");
  EXPECT_EQ(ind.value(x), ev.value(l, x));
  EXPECT_EQ(ind.value(x), CycInt::integer(2, -4));

  const auto reps = enumerate_class_reps(G);
  for (std::size_t j = 0; j < reps.size(); j += 37) EXPECT_EQ(ind.value(reps[j].rep), ev.value(l, reps[j].rep));
}

TEST(Induction, EveryFamilySampledAtQ4) {
  const auto F = FieldCtx::make(2, 2);
  const UGroup G(F);
  CharEvaluator ev(G);
  const auto reps = enumerate_class_reps(G);
  std::map<std::string, int> taken;
  for (const auto& l : enumerate_chars(*F)) {
    if (taken[l.family]++ >= 2) continue;
    const InducedCharacter ind(G, construction_for(G, l));
    for (std::size_t j = taken[l.family]; j < reps.size(); j += 29)
      ASSERT_EQ(ind.value(reps[j].rep), ev.value(l, reps[j].rep)) << l.to_string() << " at " << G.format(reps[j].rep);
  }
  EXPECT_EQ(taken.size(), char_families(2).size());
}
