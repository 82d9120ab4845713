#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace granular;
using namespace fixtures;

namespace {

using K = OperatorKind;

OperatorTable upper_table(K k, const Covering& beta) { return Approximator(beta).upper_table(k); }

}  // namespace

TEST(Axioms, FirstUpperOfBeta0) {
  const auto rep = check_axioms(upper_table(K::first, beta0()));
  for (auto a : {Axiom::one_h, Axiom::two_h, Axiom::three_h, Axiom::four_h, Axiom::five_h}) EXPECT_TRUE(rep.holds_axiom(a)) << to_string(a);
  EXPECT_FALSE(rep.holds_axiom(Axiom::h4));
  ASSERT_TRUE(rep.witness(Axiom::h4).has_value());
  const auto x = rep.witness(Axiom::h4)->subsets.front();
  const auto h = upper_table(K::first, beta0());
  EXPECT_NE(h(h(x)), h(x));
}

TEST(Axioms, ThirdUpperOfBeta0) {
  const auto rep = check_axioms(upper_table(K::third, beta0()));
  EXPECT_TRUE(rep.satisfies(kTopologicalAxioms));
  EXPECT_FALSE(rep.holds_axiom(Axiom::four_h));
  const auto& w = rep.witness(Axiom::four_h);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->elements.size(), 2U);
}

TEST(Axioms, FirstUpperOfCycleFailsKernelAxiom) {
  const auto rep = check_axioms(upper_table(K::first, cycle4()));
  EXPECT_TRUE(rep.satisfies(kFirstAxioms));
  EXPECT_FALSE(rep.holds_axiom(Axiom::five_h));
}

TEST(Axioms, IdentityTableSatisfiesEverything) {
  const auto rep = check_axioms(OperatorTable::identity(u3()));
  for (auto a : kAllAxioms) EXPECT_TRUE(rep.holds_axiom(a)) << to_string(a);
}

TEST(Axioms, NonAdditiveTableIsLocalized) {
  const auto t = OperatorTable::tabulate(u3(), [](const Subset& x) { return x.count() >= 2 ? Subset::full(3) : x; });
  const auto rep = check_axioms(t);
  EXPECT_FALSE(rep.holds_axiom(Axiom::three_h));
  const auto& w = rep.witness(Axiom::three_h);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->subsets.size(), 2U);
  EXPECT_NE(t(w->subsets[0] | w->subsets[1]), t(w->subsets[0]) | t(w->subsets[1]));
}

TEST(Reconstruct, FirstFromBeta0) {
  const auto h = upper_table(K::first, beta0());
  const auto beta = reconstruct(K::first, h);
  EXPECT_EQ(beta, family(u3(), {"1,3", "2,3"}));
  EXPECT_EQ(upper_table(K::first, beta), h);
  EXPECT_NE(beta, beta0());
  const auto alt = reconstruct(K::first, h, ReconstructStrategy::alternate);
  EXPECT_EQ(upper_table(K::first, alt), h);
}

TEST(Reconstruct, SecondRoundTripsBothStrategies) {
  const auto h = upper_table(K::second, beta0());
  for (auto s : {ReconstructStrategy::canonical, ReconstructStrategy::alternate}) {
    EXPECT_EQ(upper_table(K::second, reconstruct(K::second, h, s)), h);
  }
}

TEST(Reconstruct, ThirdFromBeta0) {
  const auto h = upper_table(K::third, beta0());
  EXPECT_EQ(reconstruct(K::third, h), beta0());
}

TEST(Reconstruct, FourthFromIdentity) {
  const auto id = OperatorTable::identity(u3());
  const auto beta = reconstruct(K::fourth, id);
  std::vector<std::string> all;
  for (const char* s : {"1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"}) all.emplace_back(s);
  EXPECT_EQ(beta, family(u3(), all));
  EXPECT_EQ(upper_table(K::fourth, beta), id);
}

TEST(Reconstruct, MissingAxiomsAreReported) {
  const auto h = upper_table(K::third, beta0());
  try {
    (void)reconstruct(K::first, h);
    FAIL() << "expected ReconstructionError";
  } catch (const ReconstructionError& e) {
    EXPECT_EQ(e.missing(), std::vector<Axiom>{Axiom::four_h});
    EXPECT_FALSE(e.report().holds_axiom(Axiom::four_h));
  }
  EXPECT_THROW((void)reconstruct(K::second, upper_table(K::first, cycle4())), AxiomPreconditionError);
}

TEST(Reconstruct, SingletonRelation) {
  const auto r = singleton_relation(upper_table(K::first, beta0()));
  EXPECT_EQ(r, induced_tolerance(beta0()).relation());
}
