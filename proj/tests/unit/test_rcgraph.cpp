#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/error.hpp"
#include "schubert/rc_graph.hpp"

using namespace schubert;

namespace {

Permutation W(const std::string& text) { return Permutation::parse(text); }

// The second graph of the worked example for 215463.
RcGraph exampleGraph() { return RcGraph::fromCrosses({{1, 1}, {1, 3}, {2, 3}, {3, 1}, {3, 3}}, 6); }

std::vector<Cell> sortedCells(const RcGraph& g) {
  std::vector<Cell> cells = g.crosses();
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Permutation> permutationsUpTo(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (const Permutation& w : allPermutations(k)) out.push_back(w);
  return out;
}

}  // namespace

TEST(RcGraph, FromCrosses) {
  EXPECT_TRUE(RcGraph::fromCrosses({}, 4).permutation().isIdentity());
  EXPECT_EQ(RcGraph::fromCrosses({{1, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 1}}, 6).permutation(), W("215463"));
  EXPECT_EQ(RcGraph::fromCrosses({{1, 1}, {1, 2}, {2, 1}}, 3).permutation(), W("321"));
  EXPECT_EQ(RcGraph::fromCrosses({{1, 2}}, 3).permutation(), W("132"));
  EXPECT_THROW(RcGraph::fromCrosses({{1, 2}, {2, 1}}, 4), NotReduced);
  EXPECT_THROW(RcGraph::fromCrosses({{3, 1}}, 3), InvalidInput);
}

TEST(RcGraph, RedAndComp) {
  const RcGraph empty = RcGraph::fromCrosses({}, 3);
  EXPECT_TRUE(empty.red().empty());
  EXPECT_TRUE(empty.comp().empty());
  const RcGraph bottom = rBot(W("215463"));
  EXPECT_EQ(bottom.red(), (Word{1, 4, 3, 4, 5}));
  EXPECT_EQ(bottom.comp(), (Word{1, 3, 3, 4, 5}));
  EXPECT_EQ(exampleGraph().red(), (Word{3, 1, 4, 5, 3}));
  EXPECT_EQ(exampleGraph().comp(), (Word{1, 1, 2, 3, 3}));
}

TEST(RcGraph, CompatibilityConditions) {
  for (const Permutation& w : permutationsUpTo(5)) {
    for (const RcGraph& g : enumerateAll(w)) {
      const Word a = g.red();
      const Word i = g.comp();
      EXPECT_TRUE(oracle::reducedFor(a, w.word()));
      EXPECT_EQ(static_cast<int>(g.size()), w.length());
      EXPECT_TRUE(std::is_sorted(i.begin(), i.end()));
      for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_LE(i[k], a[k]);
        if (k + 1 < a.size() && a[k] < a[k + 1]) EXPECT_LT(i[k], i[k + 1]);
      }
    }
  }
}

TEST(RcGraph, BottomAndTop) {
  EXPECT_TRUE(rBot(Permutation::identity(4)).empty());
  EXPECT_TRUE(rTop(Permutation::identity(4)).empty());
  EXPECT_EQ(sortedCells(rBot(W("215463"))), (std::vector<Cell>{{1, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 1}}));
  for (const Permutation& w : permutationsUpTo(5)) {
    const RcGraph bottom = rBot(w);
    const RcGraph top = rTop(w);
    EXPECT_EQ(bottom.permutation(), w);
    EXPECT_EQ(top.permutation(), w);
    const Composition code = w.code();
    const std::vector<int> counts = bottom.rowCounts();
    for (std::size_t r = 0; r < counts.size(); ++r) EXPECT_EQ(counts[r], code[r]);
    for (const Cell& c : bottom.crosses()) EXPECT_LE(c.col, code[static_cast<std::size_t>(c.row - 1)]);
    for (const Cell& c : top.crosses()) EXPECT_LE(c.row, w.inverse().code()[static_cast<std::size_t>(c.col - 1)]);
  }
}

TEST(RcGraph, Moves) {
  EXPECT_TRUE(rBot(Permutation::identity(3)).ladderMoves().empty());
  EXPECT_TRUE(rBot(Permutation::identity(3)).chuteMoves().empty());
  const auto moves = rBot(W("215463")).ladderMoves();
  const MoveRecord expected{{4, 1}, {2, 2}, MoveKind::Ladder};
  EXPECT_NE(std::find(moves.begin(), moves.end(), expected), moves.end());
  for (const Permutation& w : permutationsUpTo(4)) {
    for (const RcGraph& g : enumerateAll(w)) {
      for (const MoveRecord& m : g.ladderMoves()) EXPECT_EQ(g.applied(m).permutation(), w);
      for (const MoveRecord& m : g.chuteMoves()) EXPECT_EQ(g.applied(m).permutation(), w);
    }
  }
}

TEST(RcGraph, StandardConstruction) {
  EXPECT_TRUE(standardConstruction(rBot(W("215463"))).empty());
  std::string text;
  for (const MoveRecord& m : standardConstruction(exampleGraph())) text += (text.empty() ? "" : " ") + toString(m);
  EXPECT_EQ(text, "(4,1)->(2,2) (2,2)->(1,3) (3,2)->(2,3) (5,1)->(4,2) (4,2)->(3,3)");
  for (const Permutation& w : permutationsUpTo(4))
    for (const RcGraph& g : enumerateAll(w)) EXPECT_EQ(replay(rBot(w), standardConstruction(g)), g);
}

TEST(RcGraph, EnumerationMatchesSubsetSearch) {
  EXPECT_EQ(enumerateAll(Permutation::identity(1)).size(), 1U);
  EXPECT_EQ(enumerateAll(W("2143")).size(), 3U);
  for (const Permutation& w : permutationsUpTo(5)) {
    std::vector<std::vector<Cell>> found;
    for (const RcGraph& g : enumerateAll(w)) found.push_back(sortedCells(g));
    std::sort(found.begin(), found.end());
    EXPECT_EQ(std::adjacent_find(found.begin(), found.end()), found.end()) << w.toString();
    EXPECT_EQ(found, oracle::rcGraphsBySubsets(w.word())) << w.toString();
  }
}

TEST(RcGraph, EnumeratorIsLazyAndDeterministic) {
  RcGraphEnumerator it(W("21543"));
  std::vector<RcGraph> streamed;
  while (auto g = it.next()) streamed.push_back(*g);
  EXPECT_EQ(streamed, enumerateAll(W("21543")));
  EXPECT_EQ(streamed.front(), rBot(W("21543")));
}

TEST(RcGraph, ClosuresAgree) {
  for (const Permutation& w : permutationsUpTo(5)) {
    auto visited = enumerateAll(w);
    std::sort(visited.begin(), visited.end());
    EXPECT_EQ(visited, ladderClosure(w));
    EXPECT_EQ(visited, chuteClosure(w));
  }
}

TEST(RcGraph, SchubertSum) {
  EXPECT_EQ(schubertSum(Permutation::identity(3)), Polynomial(1));
  EXPECT_EQ(schubertSum(W("2143")), Polynomial::parse("x1^2 + x1*x2 + x1*x3"));
  for (const Permutation& w : permutationsUpTo(5)) EXPECT_EQ(schubertSum(w), schubertOracle(w)) << w.toString();
}

TEST(LineDiagram, EndpointsAndRendering) {
  for (const Permutation& w : permutationsUpTo(4))
    for (const RcGraph& g : enumerateAll(w)) EXPECT_EQ(lineEndpoints(g.cellSet(), w.size()), w);
  const std::string picture = renderLineDiagram(rBot(W("132")));
  EXPECT_NE(picture.find('+'), std::string::npos);
  EXPECT_NE(picture.find('/'), std::string::npos);
}
