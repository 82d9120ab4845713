#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"

using namespace granular;
using namespace fixtures;

namespace {

using NaiveSet = std::set<std::size_t>;
using NaiveFamily = std::vector<NaiveSet>;

NaiveFamily naive(const SubsetFamily& f) {
  NaiveFamily out;
  for (const auto& b : f) out.emplace_back(b.begin(), b.end());
  return out;
}

NaiveSet to_naive(const Subset& s) { return {s.begin(), s.end()}; }

NaiveSet naive_star(const NaiveFamily& f, std::size_t x) {
  NaiveSet out;
  for (const auto& b : f) {
    if (b.count(x)) out.insert(b.begin(), b.end());
  }
  return out;
}

NaiveSet naive_down(const NaiveFamily& f, std::size_t n, std::size_t x) {
  NaiveSet out;
  for (std::size_t y = 0; y < n; ++y) out.insert(y);
  for (const auto& b : f) {
    if (!b.count(x)) continue;
    NaiveSet kept;
    for (auto y : out) {
      if (b.count(y)) kept.insert(y);
    }
    out = kept;
  }
  return out;
}

Covering random_covering(std::mt19937& rng, const UniversePtr& u) {
  const auto n = u->size();
  std::uniform_int_distribution<Mask> pick(1, full_mask(n));
  std::uniform_int_distribution<int> count(1, 6);
  std::vector<Subset> blocks;
  Mask covered = 0;
  for (int k = count(rng); k > 0 || covered != full_mask(n); --k) {
    const Mask m = pick(rng);
    blocks.emplace_back(n, m);
    covered |= m;
  }
  return Covering(u, blocks);
}

}  // namespace

TEST(Granulation, StarExamples) {
  EXPECT_EQ(star(beta0(), 2), set(u3(), "1,2,3"));
  EXPECT_EQ(star(beta0(), 0), set(u3(), "1,3"));
  EXPECT_EQ(star(partition3(), 1), set(u3(), "2"));
}

TEST(Granulation, PointClosureExamples) {
  EXPECT_EQ(point_closure(beta0(), 0), set(u3(), "1,3"));
  EXPECT_EQ(point_closure(beta0(), 1), set(u3(), "2,3"));
  EXPECT_EQ(point_closure(beta0(), 2), set(u3(), "3"));
  EXPECT_EQ(point_closure(partition3(), 1), set(u3(), "2"));
  EXPECT_EQ(point_closure(cycle4(), 0), set(u4(), "1"));
}

TEST(Granulation, CoreExamples) {
  EXPECT_EQ(core(beta0(), 0), set(u3(), "1"));
  EXPECT_EQ(core(beta0(), 2), set(u3(), "1,2,3"));
  EXPECT_EQ(core(partition3(), 1), set(u3(), "2"));
}

TEST(Granulation, ElementOutsideUniverseThrows) {
  EXPECT_THROW(star(beta0(), 3), UnknownElement);
  EXPECT_THROW(point_closure(beta0(), 7), UnknownElement);
}

TEST(Granulation, StarSystems) {
  EXPECT_EQ(star_system(beta0()), family(u3(), {"1,3", "2,3", "1,2,3"}));
  EXPECT_EQ(star_system(partition3()), partition3());
  EXPECT_EQ(star_system(cycle4()), family(u4(), {"1,2,4", "1,2,3", "2,3,4", "1,3,4"}));
}

TEST(Granulation, PointClosureSystems) {
  EXPECT_EQ(point_closure_system(beta0()), beta0());
  EXPECT_EQ(point_closure_system(partition3()), partition3());
  EXPECT_EQ(point_closure_system(cycle4()), family(u4(), {"1", "2", "3", "4"}));
}

TEST(Granulation, SpecializationPreorderOfBeta0) {
  const auto r = specialization_preorder(beta0());
  EXPECT_TRUE(r.is_preorder());
  EXPECT_EQ(r.pairs(), (std::vector<Relation::Pair>{{0, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}}));
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_EQ(r.successors(x), core(beta0(), x));
    EXPECT_EQ(r.inverse().successors(x), point_closure(beta0(), x));
  }
  EXPECT_EQ(specialization_preorder(partition3()), Relation::identity(u3()));
}

TEST(Granulation, InducedTolerance) {
  const auto t = induced_tolerance(beta0());
  EXPECT_EQ(t.tclass(0), set(u3(), "1,3"));
  EXPECT_EQ(t.tclass(1), set(u3(), "2,3"));
  EXPECT_EQ(t.tclass(2), set(u3(), "1,2,3"));
  EXPECT_EQ(induced_tolerance(partition3()).relation(), Relation::identity(u3()));
  const auto c = cycle_tolerance();
  EXPECT_EQ(c.tclass(0), set(u4(), "1,2,4"));
  EXPECT_EQ(c.tclass(2), set(u4(), "2,3,4"));
}

TEST(Granulation, ProfileAgreesWithFreeFunctions) {
  const GranuleProfile p(beta0());
  EXPECT_EQ(p.at(2).down, set(u3(), "3"));
  EXPECT_EQ(p.at(2).up, set(u3(), "1,2,3"));
  EXPECT_EQ(p.at(0).blocks_containing, family(u3(), {"1,3"}));
  EXPECT_EQ(p.up_relation(), specialization_preorder(beta0()));
  EXPECT_THROW((void)p.at(3), UnknownElement);
}

TEST(Granulation, RandomCoveringsAgreeWithNaiveOracle) {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = Universe::numbered(1 + trial % 7);
    const auto beta = random_covering(rng, u);
    const auto nf = naive(beta);
    for (std::size_t x = 0; x < u->size(); ++x) {
      ASSERT_EQ(to_naive(star(beta, x)), naive_star(nf, x));
      ASSERT_EQ(to_naive(point_closure(beta, x)), naive_down(nf, u->size(), x));
    }
    ASSERT_TRUE(refines(point_closure_system(beta), beta));
    ASSERT_TRUE(refines(beta, star_system(beta)));
    ASSERT_EQ(point_closure_system(point_closure_system(beta)), point_closure_system(beta));
  }
}
