#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/cell.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

enum class MoveKind { Ladder, Chute };

struct MoveRecord {
  Cell from;
  Cell to;
  MoveKind kind = MoveKind::Ladder;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

std::string toString(const MoveRecord& m);

// An rc-graph (pipe dream) for a permutation in S_n: a set of crosses in the
// staircase row + col <= n whose reading word is reduced.
class RcGraph {
 public:
  // The empty graph in S_1.
  RcGraph() = default;

  // Validates the cell set; throws InvalidInput for cells outside the
  // staircase and NotReduced if the reading word is not reduced.
  static RcGraph fromCrosses(std::vector<Cell> cells, int n);

  int n() const { return n_; }
  // Crosses in reading order.
  const std::vector<Cell>& crosses() const { return crosses_; }
  std::size_t size() const { return crosses_.size(); }
  bool empty() const { return crosses_.empty(); }
  bool contains(Cell c) const;
  CellSet cellSet() const { return CellSet(crosses_.begin(), crosses_.end()); }

  // a_k = i_k + j_k - 1 in reading order.
  Word red() const;
  // Row indices in reading order.
  Word comp() const;
  Permutation permutation() const { return perm_; }
  // x^R = prod over crosses of x_row.
  Polynomial monomial() const;
  // Number of crosses in each row 1..n-1.
  std::vector<int> rowCounts() const;

  // L-moves: each moves the rightmost cross of some row.  Sorted by the
  // reading order of their targets.
  std::vector<MoveRecord> ladderMoves() const;
  // Chute moves of crosses that are lowest in their column, sorted by the
  // reading order of their targets.
  std::vector<MoveRecord> chuteMoves() const;
  std::optional<MoveRecord> ladderMoveOf(Cell c) const;

  // Applies a move without re-checking reducedness (moves preserve it).
  RcGraph applied(const MoveRecord& m) const;

  // One line per row, '+' for crosses and '.' for other staircase cells.
  std::string toString() const;

  friend bool operator==(const RcGraph& a, const RcGraph& b) {
    return a.n_ == b.n_ && a.crosses_ == b.crosses_;
  }
  friend bool operator<(const RcGraph& a, const RcGraph& b);

 private:
  RcGraph(std::vector<Cell> sorted, int n, Permutation w)
      : crosses_(std::move(sorted)), n_(n), perm_(std::move(w)) {}

  std::vector<Cell> crosses_;
  int n_ = 1;
  Permutation perm_ = Permutation::identity(1);
};

RcGraph rBot(const Permutation& w);
RcGraph rTop(const Permutation& w);

// Endpoint reading of the line diagram: line k enters at (k, 1) and leaves
// through the top of column w_k.
Permutation lineEndpoints(const CellSet& crosses, int n);

// For each staircase cell, the lines entering from the left and from below.
struct LineMeeting {
  int fromLeft = 0;
  int fromBelow = 0;
};
std::vector<std::vector<LineMeeting>> traceLines(const CellSet& crosses, int n);

// Wiring picture: crosses '+', elbow pairs '/', line numbers on the left and
// endpoint labels on top.
std::string renderLineDiagram(const RcGraph& r);

// The L-move sequence turning rBot(w(R)) into R, cross by cross in reading
// order of the final positions.
std::vector<MoveRecord> standardConstruction(const RcGraph& r);

RcGraph replay(RcGraph start, const std::vector<MoveRecord>& moves);

// Walks the L-move tree rooted at rBot(w) in which every rc-graph of w
// appears exactly once.  Children are visited in reading order of the move
// targets.
class RcGraphEnumerator {
 public:
  explicit RcGraphEnumerator(const Permutation& w);

  std::optional<RcGraph> next();

 private:
  struct Node {
    RcGraph graph;
    std::optional<Cell> last;
    std::optional<Cell> current;
  };
  std::vector<Node> stack_;
};

std::vector<RcGraph> enumerateAll(const Permutation& w);

// Naive closures, used as references: every graph reachable from rBot(w) by
// L-moves, and from rTop(w) by chute moves; sorted.
std::vector<RcGraph> ladderClosure(const Permutation& w);
std::vector<RcGraph> chuteClosure(const Permutation& w);

Polynomial schubertSum(const Permutation& w);

}  // namespace schubert
