#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/cell.hpp"
#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rc_graph.hpp"

namespace schubert {

// A stable rc-graph: a reduced word with a semicompatible sequence, i.e. a
// biword (scomp; red) whose reverse is antilexicographic.  Crosses are kept
// as (row, letter - row + 1), which is the column of the corresponding
// rc-graph cross and may be nonpositive.
class StableRcGraph {
 public:
  StableRcGraph() = default;

  // Throws InvalidInput unless reverse antilexicographic, NotReduced unless
  // the bottom word is reduced.  m defaults to the largest top letter.
  static StableRcGraph fromBiword(const Biword& w, int m = 0);
  static StableRcGraph fromRcGraph(const RcGraph& r);
  // Cells in (row, letter - row + 1) coordinates.
  static StableRcGraph fromCells(std::vector<Cell> cells, int m);

  int m() const { return m_; }
  // Size of the smallest symmetric group containing the permutation.
  int n() const { return perm_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  CellSet cellSet() const { return CellSet(cells_.begin(), cells_.end()); }
  std::size_t size() const { return cells_.size(); }
  Biword biword() const;
  Word red() const;
  Word scomp() const;
  // Letters of row i, in reading order.
  Word redRow(int i) const;
  Permutation permutation() const { return perm_; }
  Polynomial monomial() const;

  // Crosses in the [m] x [n + m] picture: (u, v + m - u + 1).
  std::vector<Cell> pictureCrosses() const;

  // Whether scomp also satisfies i_k <= a_k.
  bool isRcGraph() const;
  // Throws InvalidInput unless isRcGraph(); n defaults to n().
  RcGraph toRcGraph(int n = 0) const;

  // P~ and Q~ of the biword.
  TableauPair egPair() const;

  std::string toString() const;

  friend bool operator==(const StableRcGraph& a, const StableRcGraph& b) {
    return a.m_ == b.m_ && a.cells_ == b.cells_;
  }
  friend bool operator<(const StableRcGraph& a, const StableRcGraph& b);

 private:
  std::vector<Cell> cells_;
  int m_ = 0;
  Permutation perm_ = Permutation::identity(1);
};

// Pairing of the crosses in rows r and r+1, as for diagrams.
DiagramPairing rPairing(const StableRcGraph& g, int r);

// Inverse chute move on the rightmost unpaired cross of row r+1.
std::optional<StableRcGraph> eTilde(int r, const StableRcGraph& g);
// Chute move on the leftmost unpaired cross of row r.
std::optional<StableRcGraph> fTilde(int r, const StableRcGraph& g);
// |s - t| chute or inverse chute moves exchanging the unpaired counts.
StableRcGraph sigmaTilde(int r, const StableRcGraph& g);

// Nilplactic e~_r^+ / f~_r^+ on the biword columns.
std::optional<StableRcGraph> eTildePlus(int r, const StableRcGraph& g);
std::optional<StableRcGraph> fTildePlus(int r, const StableRcGraph& g);

// The same operators on rc-graphs; nullopt when the result is empty or is
// not an rc-graph.
std::optional<RcGraph> eTilde(int r, const RcGraph& g);
std::optional<RcGraph> fTilde(int r, const RcGraph& g);

// phi(R) = (scomp(R); phi(red(R))) as a diagram.
Diagram plactifyGraph(const StableRcGraph& g);
Diagram plactifyGraph(const RcGraph& g);

}  // namespace schubert
