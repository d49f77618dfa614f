#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "oracles.hpp"
#include "schubert/balanced.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/kohnert.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/stable_rc_graph.hpp"

using namespace schubert;

namespace {

Permutation W(const std::string& text) { return Permutation::parse(text); }

std::vector<Permutation> permutationsUpTo(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (const Permutation& w : allPermutations(k)) out.push_back(w);
  return out;
}

RcGraph exampleGraph() { return RcGraph::fromCrosses({{1, 1}, {1, 3}, {2, 3}, {3, 1}, {3, 3}}, 6); }

std::string text(const RowContent& t) {
  std::string out;
  for (const Word& row : t) out += "(" + joinWord(row, "") + ")";
  return out;
}

// A hook is balanced when the corner label can sit at position `arm` of the
// sorted hook labels.
bool hookBalancedByCounting(const Labeling& b) {
  for (const auto& [corner, label] : b) {
    int arm = 0;
    int less = 0;
    int notMore = 1;
    for (const auto& [c, v] : b) {
      const bool inArm = c.row == corner.row && c.col > corner.col;
      const bool inLeg = c.col == corner.col && c.row > corner.row;
      if (!inArm && !inLeg) continue;
      arm += inArm;
      less += v < label;
      notMore += v <= label;
    }
    if (less > arm || notMore <= arm) return false;
  }
  return true;
}

// Every flagged column-strict balanced labeling of D(w), by exhaustive
// search over labels 1..row.
std::vector<Labeling> balancedBySearch(const Permutation& w) {
  const auto cells = oracle::permutationDiagram(w.word());
  const std::vector<Cell> order(cells.begin(), cells.end());
  std::vector<Labeling> out;
  Labeling cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      std::set<std::pair<int, int>> seen;
      for (const auto& [c, v] : cur)
        if (!seen.insert({c.col, v}).second) return;
      if (hookBalancedByCounting(cur)) out.push_back(cur);
      return;
    }
    for (int v = 1; v <= order[k].row; ++v) {
      cur[order[k]] = v;
      rec(k + 1);
    }
    cur.erase(order[k]);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Kohnert, PermutationDiagram) {
  EXPECT_TRUE(permDiagram(Permutation::identity(4)).empty());
  EXPECT_EQ(permDiagram(W("215463")), Diagram(CellSet{{1, 1}, {3, 3}, {3, 4}, {4, 3}, {5, 3}}));
  CellSet stair;
  for (int i = 1; i < 5; ++i)
    for (int j = 1; i + j <= 5; ++j) stair.insert({i, j});
  EXPECT_EQ(permDiagram(Permutation::longest(5)), Diagram(stair));
  for (const Permutation& w : permutationsUpTo(5)) EXPECT_EQ(permDiagram(w).cells(), oracle::permutationDiagram(w.word()));
}

TEST(Kohnert, Moves) {
  EXPECT_TRUE(kMoves(Diagram()).empty());
  Diagram d = permDiagram(W("215463"));
  for (const auto& [from, to] : std::vector<std::pair<int, int>>{{4, 2}, {2, 1}, {5, 4}, {4, 2}}) {
    const auto m = kMoveOfRow(d, from);
    ASSERT_TRUE(m.has_value()) << "row " << from;
    EXPECT_EQ(m->to, to);
    d = applyKMove(d, *m);
  }
  EXPECT_TRUE(phiSet(W("215463")).contains(d));
}

TEST(Kohnert, ClosureSumAndPhi) {
  EXPECT_EQ(phiSet(Permutation::identity(3)), (std::set<Diagram>{Diagram()}));
  for (const Permutation& w : permutationsUpTo(5)) {
    const auto closure = kohnertClosure(w);
    std::set<CellSet> cellSets;
    Polynomial total;
    for (const Diagram& d : closure) {
      cellSets.insert(d.cells());
      total += d.monomial();
    }
    EXPECT_EQ(cellSets, oracle::kohnertDiagrams(w.word())) << w.toString();
    EXPECT_EQ(total, schubertOracle(w)) << w.toString();
    EXPECT_EQ(closure, phiSet(w)) << w.toString();
    EXPECT_EQ(plactifyGraph(rBot(w)), permDiagram(w));
  }
}

TEST(Kohnert, BergeronRecursion) {
  const Permutation top = Permutation::longest(4);
  EXPECT_EQ(phiSet(top), (std::set<Diagram>{permDiagram(top)}));
  for (const Permutation& w : allPermutations(4)) {
    auto byRecursion = phiByRecursion(w);
    std::sort(byRecursion.begin(), byRecursion.end());
    EXPECT_EQ(std::adjacent_find(byRecursion.begin(), byRecursion.end()), byRecursion.end());
    const auto phi = phiSet(w);
    EXPECT_EQ(std::set<Diagram>(byRecursion.begin(), byRecursion.end()), phi) << w.toString();
    auto graphs = rcGraphsByRecursion(w);
    std::sort(graphs.begin(), graphs.end());
    auto expected = enumerateAll(w);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(graphs, expected) << w.toString();
    if (w == top) continue;
    const int r = firstAscent(w);
    const Permutation v = w.timesSimple(r);
    for (const RcGraph& g : enumerateAll(v)) {
      std::vector<Diagram> viaGraphs;
      for (const RcGraph& h : partialTildeRc(g, w)) viaGraphs.push_back(plactifyGraph(h));
      std::sort(viaGraphs.begin(), viaGraphs.end());
      auto viaDiagrams = bergeronPartialDiagram(plactifyGraph(g), w);
      std::sort(viaDiagrams.begin(), viaDiagrams.end());
      EXPECT_EQ(viaGraphs, viaDiagrams) << w.toString();
    }
  }
}

TEST(Kohnert, EndMapAndMixedLines) {
  EXPECT_TRUE(endMap(RcGraph::fromCrosses({}, 3)).empty());
  for (const Permutation& w : permutationsUpTo(5)) {
    const bool avoids = classify(w).is321Avoiding;
    bool someMixed = false;
    for (const RcGraph& g : enumerateAll(w)) {
      someMixed = someMixed || hasMixedLine(g);
      if (avoids) EXPECT_EQ(endMap(g), plactifyGraph(g)) << w.toString();
    }
    EXPECT_EQ(someMixed, !avoids) << w.toString();
  }
}

TEST(Balanced, Examples) {
  EXPECT_TRUE(balancedLabelOf(RcGraph::fromCrosses({}, 3)).empty());
  EXPECT_TRUE(isBalanced(Labeling{}, Diagram()));
  EXPECT_EQ(text(rowContentOfGraph(rBot(W("215463")))), "(1)()(33)(4)(5)()");
  EXPECT_EQ(text(rowContentOfGraph(exampleGraph())), "(1)()(32)(1)(3)()");
  EXPECT_EQ(graphFromRowContent(RowContent{{1}, {}, {3, 3}, {4}, {5}, {}}, W("215463")), rBot(W("215463")));
  EXPECT_EQ(graphFromRowContent(RowContent{{1}, {}, {3, 2}, {1}, {3}, {}}, W("215463")), exampleGraph());
  for (const Word& row : rowContentOfGraph(RcGraph::fromCrosses({}, 4))) EXPECT_TRUE(row.empty());
}

TEST(Balanced, SwappingHookLabelsCanBreakBalance) {
  bool witness = false;
  for (const Permutation& w : allPermutations(4)) {
    const Diagram d = permDiagram(w);
    for (const Labeling& b : allBalancedLabelings(w)) {
      for (const auto& [x, vx] : b)
        for (const auto& [y, vy] : b) {
          if (vx == vy || !(x.row == y.row || x.col == y.col)) continue;
          Labeling swapped = b;
          std::swap(swapped[x], swapped[y]);
          witness = witness || !isHookBalanced(swapped, d);
        }
    }
  }
  EXPECT_TRUE(witness);
}

TEST(Balanced, LabelingsMatchSearchAndSumToSchubert) {
  for (const Permutation& w : permutationsUpTo(5)) {
    const auto labelings = allBalancedLabelings(w);
    EXPECT_EQ(labelings, balancedBySearch(w)) << w.toString();
    Polynomial total;
    for (const Labeling& b : labelings) total += labelingMonomial(b);
    EXPECT_EQ(total, schubertOracle(w)) << w.toString();
  }
}

TEST(Balanced, BijectionWithRcGraphs) {
  for (const Permutation& w : permutationsUpTo(5)) {
    const Diagram d = permDiagram(w);
    std::set<Labeling> images;
    for (const RcGraph& g : enumerateAll(w)) {
      const Labeling b = balancedLabelOf(g);
      images.insert(b);
      EXPECT_TRUE(isBalanced(b, d));
      EXPECT_EQ(labelingMonomial(b), g.monomial());
      const RowContent t = rowContent(b, w.size());
      EXPECT_EQ(t, rowContentOfGraph(g));
      for (const RowContent& block : rowContentBlocks(t, w)) EXPECT_TRUE(isReverseSsytBlock(block)) << text(block);
      EXPECT_EQ(graphFromRowContent(t, w), g);
    }
    const auto all = allBalancedLabelings(w);
    EXPECT_EQ(images, std::set<Labeling>(all.begin(), all.end()));
  }
}

TEST(Balanced, RecordingTableauFromLabels) {
  EXPECT_TRUE(revtabCheck(RcGraph::fromCrosses({}, 3)));
  for (const Permutation& w : permutationsUpTo(5)) {
    const PatternFlags f = classify(w);
    if (!f.isGrassmannian && !f.is321Avoiding) continue;
    for (const RcGraph& g : enumerateAll(w)) EXPECT_TRUE(revtabCheck(g)) << w.toString() << "\n" << g.toString();
  }
}
