#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace sphmod;
using sphmod::testing::Gen;
using sphmod::testing::iv;
using sphmod::testing::make_monoid;

namespace {

bool generates_same_monoid(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  for (const auto& x : a)
    if (!monoid_membership(b, x)) return false;
  for (const auto& x : b)
    if (!monoid_membership(a, x)) return false;
  return true;
}

}  // namespace

TEST(Cone, OrthantIsSelfDual) {
  const Cone c = Cone::from_generators(2, {iv({1, 0}), iv({0, 1})});
  const Cone d = dual_cone(c);
  EXPECT_EQ(d.rays, (std::vector<IntVec>{iv({0, 1}), iv({1, 0})}));
  EXPECT_TRUE(d.is_pointed());
}

TEST(Cone, DualOfARayIsAHalfPlane) {
  const Cone d = dual_cone(Cone::from_generators(2, {iv({1, 0})}));
  EXPECT_FALSE(d.is_pointed());
  EXPECT_EQ(d.rays, (std::vector<IntVec>{iv({1, 0})}));
  EXPECT_EQ(d.lineality.size(), 1u);
  EXPECT_THROW(extremal_rays(d, full_lattice(2)), NonPointedCone);
}

TEST(Cone, DualOfASimplicialCone) {
  const Cone d = dual_cone(Cone::from_generators(2, {iv({2, 1}), iv({1, 2})}));
  EXPECT_EQ(d.rays, (std::vector<IntVec>{iv({-1, 2}), iv({2, -1})}));
}

TEST(Cone, ZeroConeIsAllowed) {
  const Cone z = Cone::from_generators(3, {});
  EXPECT_TRUE(z.rays.empty());
  EXPECT_TRUE(z.contains(iv({0, 0, 0})));
  EXPECT_FALSE(z.contains(iv({1, 0, 0})));
  const Cone whole = dual_cone(z);
  EXPECT_EQ(whole.lineality.size(), 3u);
}

TEST(Cone, ExtremalRays) {
  const Cone c = Cone::from_generators(2, {iv({1, 0}), iv({1, 1}), iv({0, 1})});
  EXPECT_EQ(extremal_rays(c, full_lattice(2)), (std::vector<IntVec>{iv({0, 1}), iv({1, 0})}));
  const auto thin = lattice_from_generators({iv({2, 4})}, 2);
  EXPECT_EQ(extremal_rays(Cone::from_generators(2, {iv({2, 4})}), thin), (std::vector<IntVec>{iv({2, 4})}));
  const Cone orthant = Cone::from_generators(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  EXPECT_EQ(extremal_rays(orthant, full_lattice(3)).size(), 3u);
}

TEST(Monoid, Membership) {
  EXPECT_FALSE(monoid_membership({iv({2}), iv({3})}, iv({1})));
  EXPECT_TRUE(monoid_membership({iv({2}), iv({3})}, iv({7})));
  EXPECT_TRUE(monoid_membership({iv({1, 0}), iv({1, 2})}, iv({2, 2})));
  EXPECT_FALSE(monoid_membership({iv({1, 0}), iv({1, 2})}, iv({1, 1})));
  EXPECT_TRUE(monoid_membership({}, iv({0, 0})));
  EXPECT_FALSE(monoid_membership({}, iv({0, 1})));
  EXPECT_THROW(monoid_membership({iv({1}), iv({-1})}, iv({3})), NonPointedCone);
}

TEST(Monoid, HilbertBasis) {
  EXPECT_EQ(hilbert_basis({iv({2}), iv({3})}), (std::vector<IntVec>{iv({1})}));
  // Saturation is taken inside the lattice the generators span.
  EXPECT_EQ(hilbert_basis({iv({1, 0}), iv({1, 2})}), (std::vector<IntVec>{iv({1, 0}), iv({1, 2})}));
  EXPECT_EQ(hilbert_basis({iv({1, 0}), iv({1, 2}), iv({3, 5})}),
            (std::vector<IntVec>{iv({1, 0}), iv({1, 1}), iv({1, 2})}));
  EXPECT_EQ(hilbert_basis({iv({1, 0}), iv({0, 1})}), (std::vector<IntVec>{iv({0, 1}), iv({1, 0})}));
  // Cone not full-dimensional in the ambient space.
  EXPECT_EQ(hilbert_basis({iv({2, 2, 0}), iv({0, 2, 2})}), (std::vector<IntVec>{iv({0, 2, 2}), iv({2, 2, 0})}));
  EXPECT_EQ(hilbert_basis({iv({1, 0, 1}), iv({1, 2, 1}), iv({3, 5, 3})}),
            (std::vector<IntVec>{iv({1, 0, 1}), iv({1, 1, 1}), iv({1, 2, 1})}));
  EXPECT_THROW(hilbert_basis({iv({1}), iv({-1})}), NonPointedCone);
}

TEST(Monoid, Saturation) {
  EXPECT_FALSE(is_saturated({iv({2}), iv({3})}));
  EXPECT_TRUE(is_saturated({iv({1, 0}), iv({0, 1})}));
  EXPECT_TRUE(is_saturated({iv({2, 0}), iv({1, 1}), iv({0, 2})}));
  EXPECT_EQ(saturate({iv({2}), iv({3})}), (std::vector<IntVec>{iv({1})}));
}

TEST(MonoidSpec, RankOneDual) {
  const MonoidSpec m = make_monoid({{'A', 1}}, 0, {iv({2})});
  ASSERT_EQ(m.k1.size(), 1u);
  EXPECT_EQ(dot(m.k1[0], *m.coords(iv({2}))), 1);
  EXPECT_EQ(m.saturated, true);
}

TEST(MonoidSpec, TorusSimplicialDual) {
  const MonoidSpec m = make_monoid({{'A', 1}}, 1, {iv({1, 1}), iv({1, -1})});
  ASSERT_EQ(m.k1.size(), 2u);
  for (const auto& rho : m.k1) {
    const Int a = dot(rho, *m.coords(iv({1, 1})));
    const Int b = dot(rho, *m.coords(iv({1, -1})));
    EXPECT_TRUE((a == 1 && b == 0) || (a == 0 && b == 1));
  }
}

TEST(MonoidSpec, DegenerateZeroMonoid) {
  const MonoidSpec m = make_monoid({{'A', 1}}, 0, {iv({0})});
  EXPECT_EQ(m.rank(), 0u);
  EXPECT_TRUE(m.k1.empty());
  EXPECT_EQ(m.saturated, true);
}

TEST(MonoidSpec, RejectsNonDominantGenerators) {
  EXPECT_THROW(make_monoid({{'A', 2}}, 0, {iv({1, -1})}), NotDominant);
  EXPECT_THROW(make_monoid({{'A', 2}}, 0, {iv({1})}), DimensionMismatch);
}

TEST(MonoidSpec, NonPointedConeLeavesSaturationUndecided) {
  const MonoidSpec m = make_monoid({{'A', 1}}, 1, {iv({0, 1}), iv({0, -1}), iv({1, 0})});
  EXPECT_FALSE(m.saturated.has_value());
}

TEST(ConesProperty, DoubleDualIsIdentity) {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = g.uniform(1, 5);
    const auto gens = g.pointed_generators(d);
    const Cone c = Cone::from_generators(d, gens);
    const Cone dd = dual_cone(dual_cone(c));
    EXPECT_EQ(dd.rays, c.rays);
    EXPECT_EQ(dd.lineality, c.lineality);
    for (const auto& x : gens) EXPECT_TRUE(dd.contains(x));
    for (const auto& r : dd.rays) EXPECT_TRUE(c.contains(r));
  }
}

TEST(ConesProperty, SaturationIsIdempotentAndSaturated) {
  Gen g(22);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = g.uniform(1, 3);
    auto gens = g.pointed_generators(d, 4);
    const auto s = saturate(gens);
    EXPECT_TRUE(is_saturated(s));
    EXPECT_TRUE(generates_same_monoid(saturate(s), s));
    for (const auto& x : gens) EXPECT_TRUE(monoid_membership(s, x));
  }
}

TEST(ConesProperty, SaturatedMonoidsHaveValueOneOnEveryDualRay) {
  Gen g(23);
  for (int trial = 0; trial < 200; ++trial) {
    const MonoidSpec m = g.saturated_monoid();
    for (const auto& rho : m.k1) {
      bool one = false;
      for (const auto& h : hilbert_basis(m.generators)) one = one || dot(rho, *m.coords(h)) == 1;
      EXPECT_TRUE(one);
    }
  }
}

TEST(ConesProperty, RestrictedSimpleCorootsLieInTheDualCone) {
  Gen g(24);
  for (int trial = 0; trial < 200; ++trial) {
    const MonoidSpec m = g.saturated_monoid();
    for (int i = 0; i < m.rs->semisimple_rank; ++i) EXPECT_TRUE(m.dual.contains(m.iota(i)));
  }
}
