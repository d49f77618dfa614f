#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schubert/diagram.hpp"
#include "schubert/error.hpp"
#include "schubert/insertion.hpp"
#include "schubert/tableau.hpp"
#include "schubert/word_ops.hpp"

using namespace schubert;

namespace {

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

// Every word of the given length over [1, k].
std::vector<Word> allWords(int length, int k) {
  std::vector<Word> out{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (int a = 1; a <= k; ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Diagram> allDiagramsIn(int rows, int cols) {
  std::vector<Cell> grid;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) grid.push_back({i, j});
  std::vector<Diagram> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << grid.size()); ++mask) {
    CellSet cells;
    for (std::size_t k = 0; k < grid.size(); ++k)
      if ((mask >> k) & 1U) cells.insert(grid[k]);
    out.emplace_back(cells);
  }
  return out;
}

// Strictly decreasing words over [1, k], i.e. columns read bottom to top.
std::vector<Column> allColumns(int k) {
  std::vector<Column> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    Column c;
    for (int a = k; a >= 1; --a)
      if ((mask >> (a - 1)) & 1) c.push_back(a);
    out.push_back(c);
  }
  return out;
}

Word concat(const Column& u, const Column& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

}  // namespace

TEST(WordOperators, Pairing) {
  const RPairing p = rPairing(Word{2, 1}, 1);
  EXPECT_EQ(p.pairs.size(), 1U);
  EXPECT_EQ(p.s(), 0);
  EXPECT_EQ(p.t(), 0);
  const RPairing q = rPairing(Word{1, 2}, 1);
  EXPECT_TRUE(q.pairs.empty());
  EXPECT_EQ(q.s(), 1);
  EXPECT_EQ(q.t(), 1);
  const RPairing none = rPairing(Word{4, 5, 4}, 1);
  EXPECT_TRUE(none.pairs.empty() && none.s() == 0 && none.t() == 0);
}

TEST(WordOperators, Examples) {
  EXPECT_EQ(eWord(1, Word{1, 2}), (Word{1, 1}));
  EXPECT_EQ(fWord(1, Word{1, 2}), (Word{2, 2}));
  EXPECT_FALSE(eWord(1, Word{2, 1}).has_value());
  EXPECT_EQ(sigmaWord(1, Word{1, 2, 2}), (Word{1, 1, 2}));
}

TEST(WordOperators, EAndFAreInverse) {
  for (int len = 0; len <= 5; ++len)
    for (const Word& u : allWords(len, 3))
      for (int r = 1; r <= 2; ++r) {
        if (auto e = eWord(r, u)) EXPECT_EQ(fWord(r, *e), u);
        if (auto f = fWord(r, u)) EXPECT_EQ(eWord(r, *f), u);
        EXPECT_EQ(sigmaWord(r, sigmaWord(r, u)), u);
      }
}

TEST(Schensted, Basics) {
  EXPECT_EQ(schensted(Word{}).p.size(), 0);
  EXPECT_EQ(insertionTableau(Word{1, 1, 2, 3}), T({{1, 1, 2, 3}}));
  EXPECT_EQ(insertionTableau(Word{3, 1, 2}), T({{1, 2}, {3}}));
  EXPECT_EQ(schensted(Word{3, 1, 2}).q, T({{1, 3}, {2}}));
}

TEST(Schensted, KnuthClassInvariance) {
  for (int len = 0; len <= 5; ++len)
    for (const Word& u : allWords(len, 3)) {
      const Tableau p = insertionTableau(u);
      const auto cls = oracle::knuthClosure(u);
      for (const Word& v : cls) EXPECT_EQ(insertionTableau(v), p) << joinWord(u) << " ~ " << joinWord(v);
      auto lib = knuthClass(u);
      EXPECT_EQ(std::set<Word>(lib.begin(), lib.end()), cls);
      EXPECT_EQ(insertionTableau(p.rowWord()), p);
    }
}

// h(P(u)) = P(h(u)) and Q(h(u)) = Q(u) for h in {e_r, f_r, sigma_r}.
TEST(Schensted, CoplacticOperatorsOnWords) {
  for (int len = 0; len <= 6; ++len)
    for (const Word& u : allWords(len, 3)) {
      const TableauPair pq = schensted(u);
      for (int r = 1; r <= 2; ++r) {
        const auto e = eWord(r, u);
        const auto et = eTableau(r, pq.p);
        ASSERT_EQ(e.has_value(), et.has_value());
        if (e) {
          EXPECT_EQ(schensted(*e).p, *et);
          EXPECT_EQ(schensted(*e).q, pq.q);
        }
        const auto f = fWord(r, u);
        const auto ft = fTableau(r, pq.p);
        ASSERT_EQ(f.has_value(), ft.has_value());
        if (f) {
          EXPECT_EQ(schensted(*f).p, *ft);
          EXPECT_EQ(schensted(*f).q, pq.q);
        }
        const Word s = sigmaWord(r, u);
        EXPECT_EQ(schensted(s).p, sigmaTableau(r, pq.p));
        EXPECT_EQ(schensted(s).q, pq.q);
      }
    }
}

TEST(Rsk, SingleBiletterAndEmpty) {
  const TableauPair empty = rskConjugate(Biword{});
  EXPECT_EQ(empty.p.size(), 0);
  EXPECT_EQ(empty.q.size(), 0);
  const TableauPair one = rskConjugate(Biword{{2}, {3}});
  EXPECT_EQ(one.p, T({{3}}));
  EXPECT_EQ(one.q, T({{2}}));
}

TEST(Rsk, Symmetry) {
  for (const Diagram& d : allDiagramsIn(3, 3)) {
    const Biword w = d.biword();
    const Biword wt = transposeBiword(w);
    EXPECT_TRUE(isReverseLex(wt));
    EXPECT_EQ(Diagram::fromBiword(transposeBiword(wt)), d);
    const TableauPair a = rskConjugate(w);
    const TableauPair b = rskConjugateTransposed(wt);
    EXPECT_EQ(a.p, b.q) << d.toString();
    EXPECT_EQ(a.q, b.p) << d.toString();
    EXPECT_EQ(a.p.shape(), conjugate(a.q.shape()));
  }
}

TEST(ColumnJdt, Examples) {
  EXPECT_FALSE(jdtColumns(Column{1}, Column{1}).has_value());
  EXPECT_FALSE(jdtColumns(Column{3, 1}, Column{}).has_value());
}

TEST(ColumnJdt, PlacticEquivalentWithExpectedLengths) {
  const auto cols = allColumns(4);
  int moved = 0;
  for (const Column& u : cols)
    for (const Column& v : cols) {
      const auto cls = oracle::knuthClosure(concat(u, v));
      if (auto r = jdtColumns(u, v)) {
        ++moved;
        EXPECT_EQ(r->first.size(), u.size() + 1);
        EXPECT_EQ(r->second.size() + 1, v.size());
        EXPECT_TRUE(cls.contains(concat(r->first, r->second)));
        EXPECT_EQ(jdtInvColumns(r->first, r->second), (std::optional<ColumnPair>{{u, v}}));
      }
      if (auto r = jdtInvColumns(u, v)) {
        EXPECT_EQ(r->first.size() + 1, u.size());
        EXPECT_EQ(r->second.size(), v.size() + 1);
        EXPECT_TRUE(cls.contains(concat(r->first, r->second)));
      }
    }
  EXPECT_GT(moved, 0);
}

TEST(DiagramOperators, Examples) {
  const Diagram far(CellSet{{4, 1}, {5, 2}});
  EXPECT_FALSE(eDiagram(1, far).has_value());
  EXPECT_FALSE(fDiagram(1, far).has_value());
  const Diagram single(CellSet{{3, 2}});
  EXPECT_EQ(eDiagram(2, single), Diagram(CellSet{{2, 2}}));
}

// P(hD) = P(D) and Q(hD) = h(Q(D)); the jdt operators e+ and f+ agree.
TEST(DiagramOperators, CoplacticOnDiagrams) {
  for (const Diagram& d : allDiagramsIn(3, 3)) {
    const TableauPair pq = d.rsk();
    for (int r = 1; r <= 2; ++r) {
      const auto e = eDiagram(r, d);
      const auto f = fDiagram(r, d);
      ASSERT_EQ(e.has_value(), eTableau(r, pq.q).has_value()) << d.toString();
      ASSERT_EQ(f.has_value(), fTableau(r, pq.q).has_value()) << d.toString();
      if (e) {
        EXPECT_EQ(e->rsk().p, pq.p);
        EXPECT_EQ(e->rsk().q, *eTableau(r, pq.q));
        EXPECT_EQ(fDiagram(r, *e), d);
      }
      if (f) {
        EXPECT_EQ(f->rsk().p, pq.p);
        EXPECT_EQ(f->rsk().q, *fTableau(r, pq.q));
        EXPECT_EQ(eDiagram(r, *f), d);
      }
      const Diagram s = sigmaDiagram(r, d);
      EXPECT_EQ(s.rsk().p, pq.p);
      EXPECT_EQ(s.rsk().q, sigmaTableau(r, pq.q));
      const auto ep = ePlus(r, d.biword());
      const auto fp = fPlus(r, d.biword());
      ASSERT_EQ(ep.has_value(), e.has_value());
      ASSERT_EQ(fp.has_value(), f.has_value());
      if (ep) EXPECT_EQ(Diagram::fromBiword(*ep), *e);
      if (fp) EXPECT_EQ(Diagram::fromBiword(*fp), *f);
    }
  }
}

// e^-(w') = (e^+(w))' with e^- acting as e_r on the bottom word of the
// transposed biword.
TEST(DiagramOperators, PlusMinusDuality) {
  for (const Diagram& d : allDiagramsIn(3, 3)) {
    const Biword w = d.biword();
    const Biword wt = transposeBiword(w);
    for (int r = 1; r <= 2; ++r) {
      const auto ep = ePlus(r, w);
      const auto em = eWord(r, wt.bottom);
      ASSERT_EQ(ep.has_value(), em.has_value()) << d.toString();
      if (ep) EXPECT_EQ((Biword{wt.top, *em}), transposeBiword(*ep));
    }
  }
}

TEST(Evacuation, Examples) {
  EXPECT_EQ(evacuation(T({{1}}), 2), T({{2}}));
  EXPECT_THROW(evacuation(T({{3}}), 2), InvalidInput);
}

// evac(P(u)) = P(u*) where u* reverses u and complements k -> d + 1 - k.
TEST(Evacuation, ReverseComplementOracle) {
  for (const Partition& lambda : std::vector<Partition>{{1}, {2, 1}, {3, 3, 3}, {3, 2}, {2, 2, 1}, {3, 1, 1}}) {
    for (int d = static_cast<int>(lambda.size()); d <= 4; ++d) {
      for (const Tableau& t : allSsyt(lambda, 1, d)) {
        Word star = t.rowWord();
        std::reverse(star.begin(), star.end());
        for (int& k : star) k = d + 1 - k;
        const Tableau e = evacuation(t, d);
        EXPECT_EQ(e, insertionTableau(star)) << t.toString();
        EXPECT_EQ(evacuation(e, d), t);
      }
    }
  }
}

TEST(Rectify, MatchesInsertionOfReadingWordAndIgnoresSlideOrder) {
  EXPECT_EQ(rectify(T({{1, 2}, {3}})), T({{1, 2}, {3}}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    // A random skew tableau: rotate-complement a random straight one.
    const Partition lambda{3, 2, 2, 1};
    auto all = allSsyt(lambda, 1, 5);
    const Tableau t = all[rng() % all.size()];
    const Tableau skew = rotateComplement(t, 5);
    ASSERT_FALSE(skew.isStraight());
    const Tableau r = rectify(skew);
    EXPECT_EQ(r, insertionTableau(skew.rowWord()));
    EXPECT_EQ(r, rectify(skew, false));
  }
}
