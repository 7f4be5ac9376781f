#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "table_oracle.hpp"

using namespace sphmod;
using sphmod::testing::iv;
using sphmod::testing::make_rs;

namespace {

std::set<IntVec> coeff_set(const std::vector<SphericalRoot>& s) {
  std::set<IntVec> out;
  for (const auto& x : s) out.insert(x.coeffs);
  return out;
}

std::multiset<int> rows_of(const std::vector<SphericalRoot>& s) {
  std::multiset<int> out;
  for (const auto& x : s) out.insert(x.row);
  return out;
}

}  // namespace

TEST(SigmaBar, A2) {
  auto rs = make_rs({{'A', 2}});
  const auto s = enumerate_sigmabar(*rs);
  EXPECT_EQ(coeff_set(s), (std::set<IntVec>{iv({1, 0}), iv({0, 1}), iv({2, 0}), iv({0, 2}), iv({1, 1})}));
}

TEST(SigmaBar, B2) {
  auto rs = make_rs({{'B', 2}});
  const auto s = enumerate_sigmabar(*rs);
  EXPECT_EQ(coeff_set(s),
            (std::set<IntVec>{iv({1, 0}), iv({0, 1}), iv({2, 0}), iv({0, 2}), iv({1, 1}), iv({2, 2})}));
  EXPECT_EQ(rows_of(s), (std::multiset<int>{1, 1, 2, 2, 6, 7}));
}

TEST(SigmaBar, G2) {
  auto rs = make_rs({{'G', 2}});
  const auto s = enumerate_sigmabar(*rs);
  EXPECT_EQ(coeff_set(s),
            (std::set<IntVec>{iv({1, 0}), iv({0, 1}), iv({2, 0}), iv({0, 2}), iv({1, 1}), iv({4, 2})}));
  EXPECT_EQ(rows_of(s), (std::multiset<int>{1, 1, 2, 2, 12, 13}));
}

TEST(SigmaBar, OrthogonalPairsListLowerIndexFirst) {
  auto rs = make_rs({{'A', 1}, {'A', 1}, {'A', 1}});
  int pairs = 0;
  for (const auto& s : enumerate_sigmabar(*rs)) {
    if (s.row != 3) continue;
    ++pairs;
    EXPECT_LT(s.numbering[0], s.numbering[1]);
    EXPECT_EQ(s.support_type, "A1xA1");
  }
  EXPECT_EQ(pairs, 3);
}

TEST(SigmaBar, PiSigmaExamples) {
  auto a3 = make_rs({{'A', 3}});
  EXPECT_EQ(pi_sigma(*a3, a3->weight_of(RootCoeffs{1, 2, 1})), (std::vector<int>{0, 2}));
  auto b2 = make_rs({{'B', 2}});
  EXPECT_TRUE(pi_sigma(*b2, b2->weight_of(RootCoeffs{1, 1})).empty());
  auto c3 = make_rs({{'C', 3}});
  EXPECT_EQ(pi_sigma(*c3, c3->weight_of(RootCoeffs{1, 2, 1})), (std::vector<int>{2}));
  EXPECT_THROW(pi_sigma(*a3, a3->weight_of(RootCoeffs{1, -1, 0})), NotInRootLattice);
  EXPECT_THROW(pi_sigma(*a3, iv({0, 0, 0})), NotInRootLattice);
}

TEST(SigmaBar, Classify) {
  auto b3 = make_rs({{'B', 3}});
  const auto r8 = classify_sigma(*b3, b3->weight_of(RootCoeffs{1, 2, 3}));
  ASSERT_TRUE(r8);
  EXPECT_EQ(r8->row, 8);
  auto a2 = make_rs({{'A', 2}});
  EXPECT_FALSE(classify_sigma(*a2, a2->weight_of(RootCoeffs{2, 1})));
  EXPECT_FALSE(classify_sigma(*a2, iv({0, 0})));
  // Not in the root lattice at all.
  auto a1 = make_rs({{'A', 1}});
  EXPECT_FALSE(classify_sigma(*a1, iv({1})));
}

TEST(SigmaBar, TableRegenerationOnAmbientTypes) {
  for (const auto& [type, expected_rows] : sphmod::oracle::expected_rows_by_type()) {
    auto rs = make_rs({type});
    const auto all = enumerate_sigmabar(*rs);
    std::set<int> rows;
    for (const auto& s : all) {
      rows.insert(s.row);
      EXPECT_EQ(s.pi_sigma, sphmod::oracle::table_pi_sigma(s)) << label(type) << " " << coeff_label(s.coeffs);
    }
    EXPECT_EQ(rows, expected_rows) << label(type);
  }
}

TEST(SigmaBar, D4TrialityGivesThreeRowTenElements) {
  auto rs = make_rs({{'D', 4}});
  std::set<IntVec> ten;
  for (const auto& s : enumerate_sigmabar(*rs))
    if (s.row == 10) ten.insert(s.coeffs);
  EXPECT_EQ(ten, (std::set<IntVec>{iv({2, 2, 1, 1}), iv({1, 2, 2, 1}), iv({1, 2, 1, 2})}));
}

TEST(SigmaBar, F4RowElevenKeepsTheWholeOrthogonalSupport) {
  auto rs = make_rs({{'F', 4}});
  const RootCoeffs sigma{1, 2, 3, 2};
  EXPECT_EQ(pi_sigma(*rs, rs->weight_of(sigma)), (std::vector<int>{0, 1, 2}));
  EXPECT_GE(rs->find_positive(RootCoeffs{1, 2, 2, 2}), 0);
}

TEST(SigmaBar, A4CountsPerRow) {
  auto rs = make_rs({{'A', 4}});
  std::map<int, int> per;
  for (const auto& s : enumerate_sigmabar(*rs)) ++per[s.row];
  EXPECT_EQ(per, (std::map<int, int>{{1, 4}, {2, 4}, {3, 3}, {4, 6}, {5, 2}}));
}

TEST(SigmaBarProperty, ClassifyRoundTripsAndEnumerationIsStable) {
  for (DynkinComponent c : {DynkinComponent{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    auto rs = make_rs({c}, 1);
    const auto first = enumerate_sigmabar(*rs);
    EXPECT_EQ(first, enumerate_sigmabar(*rs));
    std::set<IntVec> seen;
    for (const auto& s : first) {
      EXPECT_TRUE(seen.insert(s.coeffs).second) << "duplicate " << coeff_label(s.coeffs);
      const auto back = classify_sigma(*rs, s.weight);
      ASSERT_TRUE(back);
      EXPECT_EQ(back->row, s.row);
      EXPECT_EQ(back->pi_sigma, s.pi_sigma);
      for (int g : s.pi_sigma) EXPECT_TRUE(std::binary_search(s.support.begin(), s.support.end(), g));
    }
  }
}

TEST(SigmaBarProperty, PiSigmaVersusOrthogonalSupport) {
  for (DynkinComponent c : {DynkinComponent{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    auto rs = make_rs({c});
    for (const auto& s : enumerate_sigmabar(*rs)) {
      std::vector<int> perp;
      for (int g : s.support)
        if (s.weight[g] == 0) perp.push_back(g);
      std::vector<int> diff;
      std::set_difference(perp.begin(), perp.end(), s.pi_sigma.begin(), s.pi_sigma.end(), std::back_inserter(diff));
      if (s.row == 6) {
        EXPECT_EQ(diff, std::vector<int>{s.numbering.back()});
      } else if (s.row == 9) {
        EXPECT_EQ(diff, std::vector<int>{s.numbering.front()});
      } else {
        EXPECT_TRUE(diff.empty()) << label(c) << " row " << s.row;
      }
    }
  }
}
