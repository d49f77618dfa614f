#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "schubert/crystals.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/keys.hpp"
#include "schubert/nilplactic.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/stable_rc_graph.hpp"

using namespace schubert;

namespace {

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

Permutation W(const std::string& text) { return Permutation::parse(text); }

std::vector<Permutation> permutationsUpTo(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (const Permutation& w : allPermutations(k)) out.push_back(w);
  return out;
}

std::vector<Composition> compositions(int length, int maxPart) {
  std::vector<Composition> out{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Composition> next;
    for (const Composition& a : out)
      for (int v = 0; v <= maxPart; ++v) {
        next.push_back(a);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Tableau> ssytInside321(int maxEntry) {
  std::vector<Tableau> out;
  for (const Partition& lambda :
       std::vector<Partition>{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {3, 2}, {3, 1, 1},
                              {2, 2, 1}, {3, 2, 1}})
    for (const Tableau& t : oracle::semistandardByFilter(lambda, maxEntry)) out.push_back(t);
  return out;
}

Polynomial sumOf(const std::vector<Tableau>& ts) {
  Polynomial p;
  for (const Tableau& t : ts) p += t.monomial();
  return p;
}

}  // namespace

TEST(Keys, KeyOfComposition) {
  EXPECT_EQ(keyOfComposition(Composition{3}), T({{1, 1, 1}}));
  EXPECT_EQ(keyOfComposition(Composition{1, 0, 2, 1}), T({{1, 3}, {3}, {4}}));
  EXPECT_TRUE(isKey(keyOfComposition(Composition{0, 2, 1, 3})));
  EXPECT_TRUE(isKey(T({{1, 2}, {2}})));
  EXPECT_FALSE(isKey(T({{1, 2}, {3}})));
  for (const Composition& a : compositions(4, 2)) {
    const Tableau k = keyOfComposition(a);
    Composition content = k.content(4);
    EXPECT_EQ(content, a);
  }
}

TEST(Keys, KeysAreFixed) {
  for (const Composition& a : compositions(4, 2)) {
    const Tableau k = keyOfComposition(a);
    EXPECT_EQ(leftKey(k), k);
    EXPECT_EQ(rightKey(k), k);
  }
}

TEST(Keys, InsertionAndJdtConstructionsAgree) {
  const auto all = ssytInside321(4);
  EXPECT_EQ(all.size(), 324U);
  for (const Tableau& t : all) {
    const Tableau lo = leftKey(t);
    const Tableau hi = rightKey(t);
    EXPECT_EQ(lo, leftKeyByJdt(t)) << t.toString();
    EXPECT_EQ(hi, rightKeyByJdt(t)) << t.toString();
    EXPECT_TRUE(isKey(lo) && isKey(hi));
    EXPECT_EQ(lo.shape(), t.shape());
    EXPECT_TRUE(entrywiseLeq(lo, t) && entrywiseLeq(t, hi)) << t.toString();
    EXPECT_EQ(hi, evacuation(leftKey(evacuation(t, 4)), 4));
  }
}

TEST(Keys, NilKeys) {
  const Tableau column({{1}, {3}, {4}});
  EXPECT_EQ(leftNilKey(column), column);
  EXPECT_EQ(rightNilKey(column), column);
  const Tableau p({{1, 3, 4}, {4}});
  EXPECT_EQ(leftNilKey(p.transposed()), T({{1, 3}, {3}, {4}}));
}

// K~_-(P) computed on the nilplactic side equals K_- of the plactified
// column word.
TEST(Keys, NilKeysCommuteWithPlactification) {
  for (const Permutation& w : permutationsUpTo(4)) {
    for (const Crystal& c : crystalPartition(w)) {
      const Tableau pt = c.p.transposed();
      const Tableau phi = pt.withColumnWord(plactify(pt.columnWord()));
      ASSERT_TRUE(phi.isSemistandard());
      EXPECT_EQ(leftKey(phi), leftNilKey(pt)) << pt.toString();
    }
  }
}

TEST(Demazure, Examples) {
  EXPECT_EQ(tabSet(Composition{0, 1}), (std::vector<Tableau>{T({{1}}), T({{2}})}));
  EXPECT_EQ(sumOf(tabSet(Composition{0, 1})), Polynomial::parse("x1 + x2"));
  EXPECT_EQ(demazureTableaux(Composition{0, 1}), (std::vector<Tableau>{T({{1}}), T({{2}})}));
  EXPECT_EQ(demazureTableaux(Composition{3, 1}), (std::vector<Tableau>{superstandard(Partition{3, 1})}));
  EXPECT_EQ(sumOf(tabSet(Composition{1, 0, 2, 1})), keyOracle(Composition{1, 0, 2, 1}));
  EXPECT_TRUE(piTableau(1, T({{2}})).empty());
  EXPECT_EQ(piTableau(1, T({{1}})).size(), 2U);
  EXPECT_EQ(piTableau(2, T({{1}})), (std::vector<Tableau>{T({{1}})}));
}

TEST(Demazure, TabSetAndKeyPolynomialMatchOracle) {
  for (const Composition& a : compositions(4, 3)) {
    const auto tab = tabSet(a);
    EXPECT_EQ(sumOf(tab), keyOracle(a)) << joinWord(a);
    EXPECT_EQ(keyPolynomial(a), keyOracle(a)) << joinWord(a);
    auto dem = demazureTableaux(a);
    std::sort(dem.begin(), dem.end());
    EXPECT_EQ(std::adjacent_find(dem.begin(), dem.end()), dem.end()) << joinWord(a);
    EXPECT_EQ(dem, tab) << joinWord(a);
  }
}

TEST(Demazure, IndependentOfReducedWord) {
  for (const Composition& a : compositions(4, 3)) {
    if (sum(a) > 6) continue;
    const Permutation u = uOfAlpha(a);
    const auto words = allReducedWords(u);
    auto first = demazureTableaux(a, words.front());
    std::sort(first.begin(), first.end());
    for (const Word& v : words) {
      auto other = demazureTableaux(a, v);
      std::sort(other.begin(), other.end());
      EXPECT_EQ(other, first) << joinWord(a) << " word " << joinWord(v);
    }
  }
}

TEST(Crystals, Examples) {
  const auto id = crystalPartition(Permutation::identity(3));
  ASSERT_EQ(id.size(), 1U);
  EXPECT_EQ(id.front().members.size(), 1U);
  const auto c = crystalPartition(W("21543"));
  ASSERT_EQ(c.size(), 3U);
  std::vector<Composition> alphas;
  for (const Crystal& x : c) alphas.push_back(x.alpha);
  std::sort(alphas.begin(), alphas.end());
  EXPECT_EQ(alphas, (std::vector<Composition>{{1, 0, 2, 1}, {2, 0, 2}, {3, 0, 0, 1}}));
  const auto decomposition = schubertKeyDecomposition(Permutation::identity(4));
  ASSERT_EQ(decomposition.size(), 1U);
  EXPECT_EQ(decomposition.front().key, Polynomial(1));
}

TEST(Crystals, ExampleGenerationFromTop) {
  for (const Crystal& c : crystalPartition(W("21543"))) {
    if (c.alpha != Composition{1, 0, 2, 1}) continue;
    const auto [top, bottom] = crystalExtremes(c.p, 5);
    auto generated = piTildeRs(Word{2, 1, 3}, {top});
    std::sort(generated.begin(), generated.end());
    EXPECT_EQ(generated, c.members);
    EXPECT_EQ(generated.size(), tabSet(c.alpha).size());
    EXPECT_NE(std::find(c.members.begin(), c.members.end(), bottom), c.members.end());
  }
}

TEST(Crystals, PartitionAndKeyDecomposition) {
  for (const Permutation& w : permutationsUpTo(5)) {
    const auto crystals = crystalPartition(w);
    std::vector<RcGraph> all;
    Polynomial total;
    for (const Crystal& c : crystals) {
      all.insert(all.end(), c.members.begin(), c.members.end());
      EXPECT_EQ(c.monomialSum(), keyOracle(c.alpha)) << w.toString();
      EXPECT_EQ(c.qSet.size(), tabSet(c.alpha).size());
      total += keyOracle(c.alpha);
    }
    std::sort(all.begin(), all.end());
    auto expected = enumerateAll(w);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(all, expected) << w.toString();
    EXPECT_EQ(total, schubertOracle(w)) << w.toString();
    const PatternFlags flags = classify(w);
    EXPECT_EQ(crystals.size() == 1, flags.isVexillary) << w.toString();
    if (flags.isGrassmannian) EXPECT_EQ(crystals.size(), 1U);
    if (flags.isVexillary) {
      Composition code = w.code();
      while (!code.empty() && code.back() == 0) code.pop_back();
      const auto terms = schubertKeyDecomposition(w);
      ASSERT_EQ(terms.size(), 1U);
      EXPECT_EQ(terms.front().alpha, code);
    }
  }
}

TEST(Crystals, GenerationOrderAndExtremes) {
  for (const Permutation& w : permutationsUpTo(4)) {
    for (const Crystal& c : crystalPartition(w)) {
      auto generated = generateCrystal(c.p, w.size());
      std::sort(generated.begin(), generated.end());
      EXPECT_EQ(generated, c.members) << w.toString();
      const auto [top, bottom] = crystalExtremes(c.p, w.size());
      EXPECT_EQ(StableRcGraph::fromRcGraph(top).egPair().q, superstandard(c.p.transposed().shape()));
      EXPECT_EQ(StableRcGraph::fromRcGraph(bottom).egPair().q, bottomKey(c.p));
      for (const RcGraph& g : c.members) {
        EXPECT_TRUE(crystalLeq(bottom, g));
        EXPECT_TRUE(crystalLeq(g, top));
      }
    }
    if (crystalPartition(w).size() == 1) {
      const Crystal c = crystalPartition(w).front();
      EXPECT_NE(std::find(c.members.begin(), c.members.end(), rTop(w)), c.members.end());
      EXPECT_NE(std::find(c.members.begin(), c.members.end(), rBot(w)), c.members.end());
    }
  }
}

TEST(Crystals, KeyConditionCharacterizesRcGraphs) {
  EXPECT_TRUE(keycondCheck(StableRcGraph::fromCells({}, 3)));
  EXPECT_FALSE(keycondCheck(StableRcGraph::fromCells({{2, 0}}, 2)));
  for (const Permutation& w : permutationsUpTo(4))
    for (const RcGraph& g : enumerateAll(w)) EXPECT_TRUE(keycondCheck(StableRcGraph::fromRcGraph(g)));
}

TEST(Crystals, DotOutput) {
  const auto c = crystalPartition(W("132"));
  ASSERT_EQ(c.size(), 1U);
  const std::string dot = crystalDot(c.front());
  EXPECT_EQ(dot.rfind("digraph", 0), 0U);
  EXPECT_NE(dot.find("->"), std::string::npos);
}
