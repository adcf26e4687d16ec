#include <gtest/gtest.h>

#include <set>

#include "ud4/classes.hpp"
#include "ud4/oracle.hpp"

using namespace ud4;

namespace {

std::vector<ClassRep> reps_of(const std::vector<ClassRep>& all, const std::string& family) {
  std::vector<ClassRep> out;
  for (const auto& r : all)
    if (r.family == family) out.push_back(r);
  return out;
}

mpz_class count_of(const UGroup& G, const std::string& family) {
  for (const auto& [name, n] : family_counts(G))
    if (name == family) return n;
  ADD_FAILURE() << "no family " << family;
  return 0;
}

}  // namespace

TEST(Classes, CentralFamily) {
  const UGroup G(FieldCtx::make(3, 1));
  const auto reps = reps_of(enumerate_class_reps(G), "C_12");
  ASSERT_EQ(reps.size(), 3u);
  for (const auto& r : reps) {
    EXPECT_EQ(r.centralizer_order, 531441);
    EXPECT_EQ(r.class_size, 1);
  }
}

TEST(Classes, ConditionIsEnforced) {
  const auto F = FieldCtx::make(3, 1);
  const UGroup G(F);
  int hits = 0;
  for (const auto& r : reps_of(enumerate_class_reps(G), "C_{1,2,3}")) {
    if (param(r.params, "a1") == kOne && param(r.params, "a2") == kOne && param(r.params, "a3") == kOne &&
        param(r.params, "b9") == kOne) {
      EXPECT_EQ(param(r.params, "b10"), Fq{2});
      ++hits;
    }
  }
  EXPECT_EQ(hits, 1);
}

TEST(Classes, FamilyCounts) {
  const UGroup G3(FieldCtx::make(3, 1));
  EXPECT_EQ(count_of(G3, "C_{1,2,3,4}"), 16);
  EXPECT_EQ(count_of(G3, "C_3"), 162);
  const UGroup G2(FieldCtx::make(2, 1));
  EXPECT_EQ(count_of(G2, "C_{8,9,10}"), 7);
  const auto two = reps_of(enumerate_class_reps(G2), "C^{p=2}_{1,2,3,4}");
  ASSERT_EQ(two.size(), 2u);
  for (const auto& r : two) EXPECT_EQ(r.centralizer_order, 32);
}

class ClassEquation : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(ClassEquation, SumsToGroupOrder) {
  const auto [p, a] = GetParam();
  const UGroup G(FieldCtx::make(p, a));
  const auto report = class_equation_check(G);
  EXPECT_TRUE(report.ok);
  EXPECT_TRUE(report.problems.empty());
  mpz_class q = G.field().q(), order = 1;
  for (int i = 0; i < 12; ++i) order *= q;
  EXPECT_EQ(report.total, order);
  const auto fams = class_families(p);
  const auto counts = family_counts(G);
  ASSERT_EQ(fams.size(), counts.size());
  for (std::size_t i = 0; i < fams.size(); ++i) EXPECT_EQ(counts[i].second, fams[i].count(q)) << fams[i].label;
  for (const auto& r : enumerate_class_reps(G)) EXPECT_EQ(r.class_size * r.centralizer_order, order);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, ClassEquation,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u},
                                           std::pair{7u, 1u}, std::pair{2u, 3u}, std::pair{3u, 2u}));

TEST(Classes, MatchOrbitPartitionAtQ2) {
  const UGroup G(FieldCtx::make(2, 1));
  const GroupTable tbl(G, 13);
  const auto part = orbit_classes(tbl);
  const auto reps = enumerate_class_reps(G);
  EXPECT_EQ(part.count(), reps.size());
  std::set<std::uint32_t> seen;
  for (const auto& r : reps) {
    const auto id = part.class_of[tbl.index(r.rep)];
    EXPECT_TRUE(seen.insert(id).second) << r.family << " rep shares a class";
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(part.size[id])), r.class_size) << r.family;
  }
}

TEST(Classes, FourGivesNontrivialPicks) {
  // The second value depends on the other parameters, so several nonzero picks occur.
  const UGroup G(FieldCtx::make(2, 2));
  for (const std::string fam : {"C^{p=2}_{1,2,3,4}", "C^{p=2}_{1,2,4,2q^7}", "C^{p=2}_{5,6,7,2q^8}"}) {
    std::set<std::uint32_t> values;
    for (const auto& r : reps_of(enumerate_class_reps(G), fam)) {
      for (const auto& [name, v] : r.params)
        if (name[0] == 'd') values.insert(v.v);
    }
    EXPECT_GE(values.size(), 2u) << fam;
    EXPECT_TRUE(values.count(0)) << fam;
  }
}

TEST(Classes, Transport) {
  const auto F = FieldCtx::make(5, 1);
  const UGroup G(F);
  const GraphAuto tau = GraphAuto::tau();
  EXPECT_EQ(permute_label("C_{1,3}", tau), "C_{3,4}");
  EXPECT_EQ(permute_label("C_{1,q^7}", GraphAuto::sigma12()), "C_{2,q^7}");
  EXPECT_EQ(permute_label("C_{2,q^7}", GraphAuto::sigma12()), "C_{1,q^7}");
  EXPECT_EQ(permute_label("C_12", tau), "C_12");

  const auto reps = enumerate_class_reps(G);
  for (const auto& r : reps) EXPECT_EQ(transport_class(G, GraphAuto::identity(), r).family, r.family);

  const auto r13 = reps_of(reps, "C_{1,3}").front();
  const auto image = transport_class(G, tau, r13);
  EXPECT_EQ(image.family, "C_{3,4}");
  EXPECT_EQ(param(image.params, "a4"), param(r13.params, "a1"));
  EXPECT_EQ(param(image.params, "b8"), param(r13.params, "b10"));

  const UGroup G3(FieldCtx::make(3, 1));
  const auto q6 = reps_of(enumerate_class_reps(G3), "C_{1,2,4,q^6}").front();
  EXPECT_THROW(transport_class(G3, tau, q6), ClassError);
  const UGroup G2(FieldCtx::make(2, 1));
  EXPECT_THROW(transport_class(G2, tau, enumerate_class_reps(G2).back()), ClassError);
}

TEST(Classes, TauPermutesClassesAtQ3) {
  const UGroup G(FieldCtx::make(3, 1));
  const GroupTable tbl(G, 13);
  const auto part = orbit_classes(tbl);
  const auto reps = enumerate_class_reps(G);
  std::set<std::uint32_t> listed;
  for (const auto& r : reps) listed.insert(part.class_of[tbl.index(r.rep)]);
  for (const auto& r : reps) {
    if (r.family == "C_{1,2,4,q^6}") continue;
    const ClassRep image = transport_class(G, GraphAuto::tau(), r);
    // The relabelled rep lies in the class of tau applied to the original rep.
    EXPECT_EQ(part.class_of[tbl.index(image.rep)], part.class_of[tbl.index(G.apply_auto(GraphAuto::tau(), r.rep))])
        << r.family;
    EXPECT_TRUE(listed.count(part.class_of[tbl.index(image.rep)]));
  }
}
