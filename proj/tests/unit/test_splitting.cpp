#include <gtest/gtest.h>

#include "schubert/divided_difference.hpp"
#include "schubert/error.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/splitting.hpp"
#include "schubert/tableau.hpp"

using namespace schubert;

namespace {

Permutation W(const std::string& text) { return Permutation::parse(text); }

std::vector<CutPoints> compatibleCuts(const Permutation& w) {
  std::vector<CutPoints> out;
  const int n = w.size();
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    CutPoints a;
    for (int k = 1; k < n; ++k)
      if ((mask >> (k - 1)) & 1) a.push_back(k);
    if (isCompatible(w, a)) out.push_back(a);
  }
  return out;
}

std::vector<Permutation> permutationsUpTo(int n) {
  std::vector<Permutation> out;
  for (int k = 2; k <= n; ++k)
    for (const Permutation& w : allPermutations(k)) out.push_back(w);
  return out;
}

}  // namespace

TEST(Splitting, Compatibility) {
  EXPECT_TRUE(isCompatible(W("215463"), CutPoints{1, 3, 5}));
  EXPECT_FALSE(isCompatible(W("215463"), CutPoints{2}));
  EXPECT_THROW(requireCompatible(W("215463"), CutPoints{2}), InvalidInput);
  EXPECT_THROW(requireCompatible(W("213"), CutPoints{3}), InvalidInput);
  for (const Permutation& w : permutationsUpTo(5)) {
    CutPoints all;
    for (int k = 1; k < w.size(); ++k) all.push_back(k);
    EXPECT_TRUE(isCompatible(w, all));
  }
}

TEST(Splitting, BandsOfTheFullCutSetAreRows) {
  const Permutation w = W("215463");
  const CutPoints all{1, 2, 3, 4, 5};
  for (const RcGraph& g : enumerateAll(w)) {
    const auto bands = splitRcGraph(g, all);
    ASSERT_EQ(bands.size(), all.size());
    for (std::size_t k = 0; k < bands.size(); ++k)
      for (const Cell& c : bands[k].cells()) EXPECT_EQ(c.row, static_cast<int>(k) + 1);
    EXPECT_EQ(stackBands(bands, w.size()), g);
  }
  for (const StableRcGraph& b : splitRcGraph(rBot(Permutation::identity(4)), CutPoints{1, 3})) EXPECT_EQ(b.size(), 0U);
}

TEST(Splitting, IdentityCoefficient) {
  const auto coeffs = splitCoefficients(Permutation::identity(4), CutPoints{1, 3});
  ASSERT_EQ(coeffs.size(), 1U);
  EXPECT_EQ(coeffs.begin()->second, 1);
  EXPECT_EQ(coefficientTableaux(Permutation::identity(4), CutPoints{1, 3}, PartitionTuple{{}, {}}), 1);
}

TEST(Splitting, Examples) {
  const Permutation w = W("215463");
  EXPECT_EQ(splitFormula(w, CutPoints{1, 3, 5}), schubertOracle(w));
  CutPoints all{1, 2, 3, 4, 5};
  EXPECT_EQ(splitFormula(w, all), schubertSum(w));
  const Permutation g = W("1472356");
  ASSERT_TRUE(classify(g).isGrassmannian);
  const auto coeffs = splitCoefficientsByExtraction(g, CutPoints{3});
  ASSERT_EQ(coeffs.size(), 1U);
  EXPECT_EQ(coeffs.begin()->second, 1);
  EXPECT_EQ(schurProduct(coeffs.begin()->first, CutPoints{3}), schubertOracle(g));
}

TEST(Splitting, FormulaAndCoefficientsOverSmallPermutations) {
  for (const Permutation& w : permutationsUpTo(5)) {
    const Polynomial oracle = schubertOracle(w);
    for (const CutPoints& a : compatibleCuts(w)) {
      auto counted = splitCoefficients(w, a);
      Polynomial assembled;
      long long monomials = 0;
      for (const auto& [lambda, c] : counted) {
        EXPECT_GE(c, 0);
        EXPECT_EQ(c, coefficientTableaux(w, a, lambda));
        assembled += schurProduct(lambda, a) * c;
        monomials += c * schurProduct(lambda, a).absoluteSum();
      }
      EXPECT_EQ(assembled, oracle) << w.toString() << " " << joinWord(a);
      EXPECT_EQ(monomials, oracle.absoluteSum());
      std::erase_if(counted, [&](const auto& kv) { return schurProductVanishes(kv.first, a); });
      EXPECT_EQ(counted, splitCoefficientsByExtraction(w, a)) << w.toString() << " " << joinWord(a);
    }
  }
}

TEST(Splitting, BandsReassemble) {
  for (const Permutation& w : permutationsUpTo(4)) {
    for (const CutPoints& a : compatibleCuts(w)) {
      for (const RcGraph& g : enumerateAll(w)) {
        const auto bands = splitRcGraph(g, a);
        EXPECT_EQ(stackBands(bands, w.size()), g);
        std::vector<TableauPair> pairs;
        for (const StableRcGraph& b : bands) pairs.push_back(b.egPair());
        EXPECT_EQ(assembleFromPairs(w, a, pairs), std::optional<RcGraph>(g)) << w.toString() << " " << joinWord(a);
      }
    }
  }
}
