#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/cell.hpp"
#include "schubert/insertion.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// A finite set of cells in the positive quadrant.  Read as a biword, cell
// (i, j) is the biletter with top i and bottom j, ordered by rows and, within
// a row, by decreasing column.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(CellSet cells);
  static Diagram fromBiword(const Biword& w);

  const CellSet& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const { return cells_.contains(c); }

  Biword biword() const;
  // row(D) and col(D): the top and bottom words of the biword.
  Word rowWord() const { return biword().top; }
  Word colWord() const { return biword().bottom; }
  // D' = {(j, i)}.
  Diagram transposed() const;
  // Number of cells in rows 1..maxRow.
  std::vector<int> rowCounts() const;
  int maxRow() const;
  int maxCol() const;
  Polynomial monomial() const;

  // P(D), Q(D) of the conjugate RSK variant.
  TableauPair rsk() const { return rskConjugate(biword()); }

  std::string toString() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  CellSet cells_;
};

// Pairing of the cells in rows r and r+1: scanning columns left to right and
// each column top to bottom, a row-r cell opens and a row-(r+1) cell closes.
struct DiagramPairing {
  std::vector<std::pair<Cell, Cell>> pairs;
  std::vector<Cell> unpairedLower;  // unpaired cells of row r+1, left to right
  std::vector<Cell> unpairedUpper;  // unpaired cells of row r, left to right
};
DiagramPairing rPairing(const CellSet& cells, int r);

// Moves the rightmost unpaired cell of row r+1 up one row.
std::optional<Diagram> eDiagram(int r, const Diagram& d);
// Moves the leftmost unpaired cell of row r down one row.
std::optional<Diagram> fDiagram(int r, const Diagram& d);
// Applies e_r or f_r |s - t| times, exchanging the unpaired counts.
Diagram sigmaDiagram(int r, const Diagram& d);

// Two columns as strictly decreasing words read bottom to top, e.g. the
// column with entries 1, 3, 4 from top to bottom is {4, 3, 1}.
using Column = std::vector<int>;
using ColumnPair = std::pair<Column, Column>;

// Overlap index i of the two columns placed side by side with the right one
// shifted up by i rows.
int columnOverlap(const Column& u, const Column& v);
// Skew tableau T(u, v).
Tableau columnPairTableau(const Column& u, const Column& v);
// Jeu de taquin on the pair; nullopt when the overlap is 0 (resp. t - s).
std::optional<ColumnPair> jdtColumns(const Column& u, const Column& v);
std::optional<ColumnPair> jdtInvColumns(const Column& u, const Column& v);

// Columns of a reverse-antilexicographic biword: bottoms grouped by top
// letter 1..p.
std::vector<Column> biwordColumns(const Biword& w, int p);
Biword biwordFromColumns(const std::vector<Column>& cols);

// e_r^+ and f_r^+: jdt on the r-th and (r+1)-th columns of the biword.
std::optional<Biword> ePlus(int r, const Biword& w);
std::optional<Biword> fPlus(int r, const Biword& w);

// Placement of the biword columns side by side, each consecutive pair with
// maximum overlap: the top row and length of every column, normalized so that
// the highest column starts in row 1.
struct ColumnPlacement {
  int top = 1;
  int length = 0;

  friend bool operator==(const ColumnPlacement&, const ColumnPlacement&) = default;
};
std::vector<ColumnPlacement> biwordShape(const Biword& w);

}  // namespace schubert
