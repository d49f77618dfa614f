#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/error.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/tableau.hpp"

using namespace schubert;

namespace {

Polynomial P(const std::string& text) { return Polynomial::parse(text); }
Permutation W(const std::string& text) { return Permutation::parse(text); }

std::vector<Permutation> permutationsUpTo(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (const Permutation& w : allPermutations(k)) out.push_back(w);
  return out;
}

}  // namespace

TEST(Permutation, ParsesDigitsAndCommaLists) {
  EXPECT_EQ(W("215463").word(), (std::vector<int>{2, 1, 5, 4, 6, 3}));
  EXPECT_EQ(W("2,1,10,4,5,6,7,8,9,3").size(), 10);
  EXPECT_EQ(W("1").size(), 1);
  EXPECT_THROW(W("113"), InvalidInput);
  EXPECT_THROW(W("24"), InvalidInput);
  EXPECT_THROW(W("2a1"), InvalidInput);
  EXPECT_THROW(W(""), InvalidInput);
}

TEST(Permutation, Length) {
  EXPECT_EQ(Permutation::identity(4).length(), 0);
  EXPECT_EQ(W("215463").length(), 5);
  EXPECT_EQ(Permutation::longest(4).length(), 6);
  for (const Permutation& w : permutationsUpTo(5)) EXPECT_EQ(w.length(), oracle::inversions(w.word()));
}

TEST(Permutation, Code) {
  EXPECT_EQ(Permutation::identity(4).code(), (Composition{0, 0, 0}));
  const Composition c = W("215463").code();
  EXPECT_EQ(Composition(c.begin(), c.begin() + 5), (Composition{1, 0, 2, 1, 1}));
  const Composition s = Permutation::longest(4).code();
  EXPECT_EQ(Composition(s.begin(), s.begin() + 3), (Composition{3, 2, 1}));
  for (const Permutation& w : permutationsUpTo(5)) {
    const Composition code = w.code();
    EXPECT_EQ(sum(code), w.length());
    EXPECT_EQ(Permutation::fromCode(code).embedded(w.size()), w) << w.toString();
  }
}

TEST(Permutation, Descents) {
  EXPECT_TRUE(Permutation::identity(5).descents().empty());
  EXPECT_EQ(W("215463").descents(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(Permutation::longest(5).descents(), (std::vector<int>{1, 2, 3, 4}));
}

TEST(Permutation, Classify) {
  const PatternFlags id = classify(Permutation::identity(4));
  EXPECT_TRUE(id.is321Avoiding && id.isVexillary && id.isGrassmannian);
  EXPECT_FALSE(classify(W("321")).is321Avoiding);
  EXPECT_FALSE(classify(W("2143")).isVexillary);
  for (const Permutation& w : permutationsUpTo(5)) {
    const PatternFlags f = classify(w);
    EXPECT_EQ(f.is321Avoiding, !containsPattern(w, std::vector<int>{3, 2, 1}));
    EXPECT_EQ(f.isVexillary, !containsPattern(w, std::vector<int>{2, 1, 4, 3}));
    EXPECT_EQ(f.isGrassmannian, w.descents().size() <= 1);
  }
}

TEST(Permutation, VexillaryFlag) {
  EXPECT_TRUE(vexillaryFlag(Permutation::identity(3)).empty());
  EXPECT_EQ(vexillaryFlag(W("1432")), (std::vector<int>{2, 3}));
  EXPECT_THROW(vexillaryFlag(W("2143")), InvalidInput);
  for (const Permutation& w : permutationsUpTo(5)) {
    if (!classify(w).isGrassmannian || w.isIdentity()) continue;
    const int d = w.descents().front();
    const auto flag = vexillaryFlag(w);
    const Composition code = w.code();
    EXPECT_EQ(flag.size(), static_cast<std::size_t>(std::count_if(code.begin(), code.end(), [](int c) { return c > 0; })));
    for (int f : flag) EXPECT_LE(f, d);
  }
}

TEST(Permutation, ReducedWords) {
  for (const Permutation& w : permutationsUpTo(4)) {
    const auto words = allReducedWords(w);
    ASSERT_FALSE(words.empty());
    for (const Word& v : words) {
      EXPECT_TRUE(oracle::reducedFor(v, w.word())) << joinWord(v);
      EXPECT_EQ(Permutation::fromWord(v, w.size()), w);
    }
    EXPECT_TRUE(oracle::reducedFor(reducedWordOf(w), w.word()));
  }
  EXPECT_EQ(allReducedWords(W("321")), (std::vector<Word>{{1, 2, 1}, {2, 1, 2}}));
  EXPECT_FALSE(isReducedWord(Word{1, 1}));
  EXPECT_THROW(requireReduced(Word{2, 2}, "test word"), NotReduced);
}

TEST(Permutation, UOfAlpha) {
  EXPECT_TRUE(uOfAlpha(Composition{3, 1, 0}).isIdentity());
  EXPECT_EQ(uOfAlpha(Composition{1, 0, 2, 1}), W("3142"));
  EXPECT_EQ(uOfAlpha(Composition{0, 1}), W("21"));
}

TEST(Polynomial, CanonicalText) {
  EXPECT_EQ(P("x2*x1 + x1^2").toString(), "x1^2 + x1*x2");
  EXPECT_EQ(Polynomial().toString(), "0");
  EXPECT_EQ(Polynomial(1).toString(), "1");
  EXPECT_EQ(P("2*x1 - x1 - x1").toString(), "0");
  EXPECT_EQ(P("-x3 + 3").toString(), "-x3 + 3");
  EXPECT_EQ((P("x1 + x2") * P("x1 - x2")).toString(), "x1^2 - x2^2");
  EXPECT_THROW(P("x0"), InvalidInput);
  EXPECT_THROW(P("x1 +"), InvalidInput);
}

TEST(DividedDifference, Examples) {
  EXPECT_TRUE(dividedDifference(1, P("x1*x2")).isZero());
  EXPECT_EQ(dividedDifference(1, P("x1^2")), P("x1 + x2"));
  EXPECT_EQ(dividedDifference(1, P("x1")), Polynomial(1));
  EXPECT_EQ(isobaricPi(1, Polynomial(1)), Polynomial(1));
  EXPECT_EQ(isobaricPi(1, P("x1")), P("x1 + x2"));
  EXPECT_TRUE(isobaricPi(1, P("x2")).isZero());
}

TEST(DividedDifference, LeibnizRuleOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  std::uniform_int_distribution<int> c(-3, 3);
  auto random = [&] {
    Polynomial p;
    for (int k = 0; k < 4; ++k) p.addTerm(Monomial({e(rng), e(rng), e(rng), e(rng)}), c(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = random();
    const Polynomial g = random();
    for (int i = 1; i <= 3; ++i) {
      // d_i(fg) = d_i(f) g + s_i(f) d_i(g)
      EXPECT_EQ(dividedDifference(i, f * g), dividedDifference(i, f) * g + f.swapped(i) * dividedDifference(i, g));
      EXPECT_TRUE(dividedDifference(i, dividedDifference(i, f)).isZero());
    }
  }
}

TEST(SchubertOracle, Examples) {
  EXPECT_EQ(schubertOracle(Permutation::identity(3)), Polynomial(1));
  EXPECT_EQ(schubertOracle(W("321")).toString(), "x1^2*x2");
  EXPECT_EQ(schubertOracle(W("132")), P("x1 + x2"));
  EXPECT_EQ(schubertOracle(Permutation::longest(4)), P("x1^3*x2^2*x3"));
}

TEST(SchubertOracle, MatchesRcGraphSubsetsAndIsChainIndependent) {
  for (const Permutation& w : permutationsUpTo(5)) {
    const Polynomial s = schubertOracle(w);
    EXPECT_EQ(s, oracle::schubertBySubsets(w.word())) << w.toString();
    EXPECT_EQ(s, schubertOracle(w, ChainChoice::LargestAscent)) << w.toString();
    EXPECT_EQ(s, schubertOracle(w.embedded(w.size() + 1))) << w.toString();
  }
}

TEST(SchubertOracle, DividedDifferenceRecursion) {
  for (const Permutation& w : permutationsUpTo(5)) {
    for (int i = 1; i < w.size(); ++i) {
      const Permutation v = w.timesSimple(i);
      const Polynomial d = dividedDifference(i, schubertOracle(w));
      if (v.length() < w.length()) {
        EXPECT_EQ(d, schubertOracle(v)) << w.toString() << " i=" << i;
      } else {
        EXPECT_TRUE(d.isZero()) << w.toString() << " i=" << i;
      }
    }
  }
}

TEST(KeyOracle, Examples) {
  EXPECT_EQ(keyOracle(Composition{1, 0}), P("x1"));
  EXPECT_EQ(keyOracle(Composition{0, 1}), P("x1 + x2"));
  EXPECT_EQ(keyOracle(Composition{}), Polynomial(1));
  // A weakly decreasing composition gives its monomial.
  EXPECT_EQ(keyOracle(Composition{3, 1, 1}), P("x1^3*x2*x3"));
  // Reversed partitions give Schur polynomials.
  EXPECT_EQ(keyOracle(Composition{0, 0, 2}), schur(Partition{2}, 1, 3));
  EXPECT_EQ(keyOracle(Composition{0, 1, 2}), schur(Partition{2, 1}, 1, 3));
}

TEST(Schur, SmallCases) {
  EXPECT_EQ(schur(Partition{1}, 1, 2), P("x1 + x2"));
  EXPECT_EQ(schur(Partition{}, 1, 3), Polynomial(1));
  EXPECT_EQ(schur(Partition{2}, 1, 2), P("x1^2 + x1*x2 + x2^2"));
  EXPECT_TRUE(schur(Partition{1, 1, 1}, 1, 2).isZero());
}

TEST(Schur, SymmetricAndCountsSsyt) {
  for (const Partition& lambda : std::vector<Partition>{{2, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {3, 2, 1}}) {
    const Polynomial s = schur(lambda, 1, 4);
    for (int i = 1; i < 4; ++i) EXPECT_EQ(s.swapped(i), s);
    EXPECT_EQ(static_cast<std::size_t>(s.absoluteSum()), oracle::semistandardByFilter(lambda, 4).size());
    auto all = allSsyt(lambda, 1, 4);
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, oracle::semistandardByFilter(lambda, 4));
  }
  const std::vector<int> flag{1, 3};
  auto flagged = allSsyt(Partition{2, 2}, 1, 3, &flag);
  std::sort(flagged.begin(), flagged.end());
  EXPECT_EQ(flagged, oracle::semistandardByFilter({2, 2}, 3, &flag));
}
