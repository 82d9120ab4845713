#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace granular;
using namespace fixtures;

TEST(Universe, RejectsEmptyDuplicateAndOversized) {
  EXPECT_THROW(Universe({}), InvalidUniverse);
  EXPECT_THROW(Universe({"a", "b", "a"}), InvalidUniverse);
  std::vector<std::string> many;
  for (int i = 0; i < 25; ++i) many.push_back("e" + std::to_string(i));
  EXPECT_THROW(Universe(std::move(many)), InvalidUniverse);
}

TEST(Universe, NamesAndLookup) {
  const auto u = Universe::make({"a", "b", "c"});
  EXPECT_EQ(u->size(), 3U);
  EXPECT_EQ(u->index_of("c"), 2U);
  EXPECT_FALSE(u->find("z").has_value());
  EXPECT_THROW(u->index_of("z"), UnknownElement);
  EXPECT_EQ(*Universe::numbered(2), Universe({"1", "2"}));
}

TEST(Subset, AlgebraMatchesMaskArithmetic) {
  const auto a = set(u3(), "1,3");
  const auto b = set(u3(), "2,3");
  EXPECT_EQ(a | b, Subset::full(3));
  EXPECT_EQ(a & b, set(u3(), "3"));
  EXPECT_EQ(a - b, set(u3(), "1"));
  EXPECT_EQ(a.complement(), set(u3(), "2"));
  EXPECT_TRUE(set(u3(), "3").is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.count(), 2U);
  EXPECT_EQ(a.elements(), (std::vector<std::size_t>{0, 2}));
}

TEST(Subset, MixedUniversesThrow) {
  const auto a = Subset::full(3);
  const auto b = Subset::full(4);
  EXPECT_THROW((void)(a | b), UniverseMismatch);
  EXPECT_THROW((void)a.is_subset_of(b), UniverseMismatch);
  EXPECT_THROW(Subset(3, 0b1000), UnknownElement);
  EXPECT_THROW(Subset::singleton(3, 3), UnknownElement);
}

TEST(Subset, ForEachSubsetVisitsPowerSetInMaskOrder) {
  std::vector<Mask> seen;
  for_each_subset(3, [&](const Subset& s) { seen.push_back(s.bits()); });
  ASSERT_EQ(seen.size(), 8U);
  for (Mask m = 0; m < 8; ++m) EXPECT_EQ(seen[m], m);
}

TEST(Family, ComplementOfBeta0) {
  EXPECT_EQ(family_complement(beta0()), family(u3(), {"2", "1", "1,2"}));
}

TEST(Family, ComplementOfFullBlockIsEmptySet) {
  const auto c = family_complement(covering(u3(), {"1,2,3"}));
  ASSERT_EQ(c.size(), 1U);
  EXPECT_TRUE(c.blocks().front().is_empty());
}

TEST(Family, ComplementOfPartition) {
  EXPECT_EQ(family_complement(partition3()), family(u3(), {"2,3", "1,3", "1,2"}));
}

TEST(Family, CoveringValidation) {
  EXPECT_TRUE(is_covering(beta0()));
  EXPECT_FALSE(is_covering(family_complement(beta0())));
  EXPECT_FALSE(is_covering(family(u3(), {"", "1,2,3"})));
  EXPECT_THROW(Covering(family(u3(), {"", "1,2,3"})), InvalidCovering);
  EXPECT_THROW(Covering(family(u3(), {"1,2"})), InvalidCovering);
  EXPECT_FALSE(Covering::try_make(family(u3(), {"1"})).has_value());
}

TEST(Family, DuplicatesCollapseAndOrderIsIrrelevant) {
  EXPECT_EQ(family(u3(), {"3", "1,3", "3", "2,3"}), beta0());
  EXPECT_EQ(beta0().size(), 3U);
}

TEST(Family, UnionAndIntersection) {
  EXPECT_EQ(beta0().union_of(), Subset::full(3));
  EXPECT_EQ(beta0().intersection_of(), set(u3(), "3"));
  EXPECT_EQ(SubsetFamily(u3(), {}).intersection_of(), Subset::full(3));
}

TEST(Refinement, ExamplesAndPreorderWithoutAntisymmetry) {
  EXPECT_TRUE(refines(point_closure_system(beta0()), beta0()));
  EXPECT_TRUE(refines(beta0(), beta0()));
  const auto u = Universe::numbered(2);
  const auto alpha = covering(u, {"1", "1,2"});
  const auto beta = covering(u, {"1,2"});
  EXPECT_TRUE(refines(alpha, beta));
  EXPECT_TRUE(refines(beta, alpha));
  EXPECT_NE(alpha, beta);
  EXPECT_FALSE(refines(beta, covering(u, {"1", "2"})));
}

TEST(Relation, PropertiesAndInverse) {
  const auto r = Relation::from_pairs(u3(), {{0, 1}, {1, 2}});
  EXPECT_FALSE(r.is_reflexive());
  EXPECT_FALSE(r.is_symmetric());
  EXPECT_FALSE(r.is_transitive());
  EXPECT_TRUE(r.inverse().holds(1, 0));
  EXPECT_EQ(r.inverse().inverse(), r);
  EXPECT_TRUE(r.reflexive_closure().is_reflexive());
  EXPECT_TRUE(Relation::identity(u3()).is_preorder());
  EXPECT_TRUE(Relation::identity(u3()).is_tolerance());
  EXPECT_EQ(r.pairs(), (std::vector<Relation::Pair>{{0, 1}, {1, 2}}));
  EXPECT_THROW(Relation::from_pairs(u3(), {{0, 3}}), UnknownElement);
}

TEST(Relation, ToleranceValidation) {
  EXPECT_THROW(ToleranceRelation(Relation::from_pairs(u3(), {{0, 0}, {1, 1}})), InvalidTolerance);
  EXPECT_THROW(ToleranceRelation(Relation::from_pairs(u3(), {{0, 0}, {1, 1}, {2, 2}, {0, 1}})), InvalidTolerance);
  EXPECT_NO_THROW(ToleranceRelation(Relation::identity(u3())));
}

TEST(OperatorTable, TotalityAndLookup) {
  EXPECT_THROW(OperatorTable(u3(), std::vector<Subset>(7, Subset::empty(3))), NonTotalTable);
  EXPECT_THROW(OperatorTable::identity(Universe::numbered(6)), OutOfRange);
  const auto id = OperatorTable::identity(u3());
  EXPECT_EQ(id(set(u3(), "1,2")), set(u3(), "1,2"));
  EXPECT_EQ(id.at_element(2), set(u3(), "3"));
  EXPECT_EQ(id.dual(), id);
  EXPECT_THROW((void)id(Subset::full(4)), UniverseMismatch);
}

TEST(Format, SubsetsAndFamiliesRenderSorted) {
  EXPECT_EQ(format_subset(*u3(), set(u3(), "3,1")), "{1,3}");
  EXPECT_EQ(format_subset(*u3(), Subset::empty(3)), "{}");
  EXPECT_EQ(format_family(beta0()), "{{1,3},{2,3},{3}}");
  EXPECT_EQ(format_pairs(Relation::from_pairs(u3(), {{2, 0}})), "(3,1)");
}
