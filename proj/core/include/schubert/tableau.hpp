#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schubert/cell.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// A filling of a (possibly skew) Young diagram lambda/mu in English notation.
// Cells of mu are stored as 0; all other entries are positive.
class Tableau {
 public:
  Tableau() = default;
  // Straight shape given by its rows; throws InvalidInput unless the row
  // lengths are weakly decreasing and entries positive.
  explicit Tableau(std::vector<std::vector<int>> rows);
  // Skew shape: `rows[i]` lists the entries of row i to the right of
  // inner[i].
  static Tableau skew(const Partition& inner, const std::vector<std::vector<int>>& rows);

  Partition shape() const;
  Partition inner() const;
  bool isStraight() const;
  int numRows() const { return static_cast<int>(grid_.size()); }
  // Number of filled (non-inner) cells.
  int size() const;
  // Entry at (r, c), 1-based; 0 for inner cells and cells outside lambda.
  int at(int r, int c) const;
  int rowLength(int r) const;
  int columnLength(int c) const;
  // Filled entries of each row, inner cells omitted.
  std::vector<std::vector<int>> rowEntries() const;
  // Filled entries of column c from top to bottom.
  std::vector<int> column(int c) const;
  const std::vector<std::vector<int>>& grid() const { return grid_; }

  bool isSemistandard() const;
  int maxEntry() const;
  // Rows from bottom to top, each left to right.
  Word rowWord() const;
  // Columns from left to right, each bottom to top.
  Word columnWord() const;
  // Multiplicities of 1..d (d defaults to the largest entry).
  Composition content(int d = 0) const;
  Polynomial monomial() const;

  // Transpose (straight shapes only).
  Tableau transposed() const;
  // The tableau of the same shape whose row word (or column word) is `w`.
  Tableau withRowWord(const Word& w) const;
  Tableau withColumnWord(const Word& w) const;

  void set(int r, int c, int value);

  std::string toString() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> grid_;
};

// Entrywise a <= b for tableaux of the same shape.
bool entrywiseLeq(const Tableau& a, const Tableau& b);

// U(lambda): every entry of row i equals i.
Tableau superstandard(const Partition& lambda);

// Filling of `lambda` whose column j holds the entries of `cols[j]` top down.
Tableau fromColumns(const std::vector<std::vector<int>>& cols);

// Conjugate partition.
Partition conjugate(const Partition& lambda);

// Enumerates SSYT of straight shape lambda with entries in [lo, hi]; when
// `rowBound` is given, entries of row i are at most rowBound[i-1].
void forEachSsyt(const Partition& lambda, int lo, int hi,
                 const std::function<void(const Tableau&)>& visit,
                 const std::vector<int>* rowBound = nullptr);
std::vector<Tableau> allSsyt(const Partition& lambda, int lo, int hi,
                             const std::vector<int>* rowBound = nullptr);

// Enumerates SSYT of skew shape lambda/mu with entries in [lo, hi], with
// optional per-row upper bounds.
void forEachSkewSsyt(const Partition& lambda, const Partition& mu, int lo, int hi,
                     const std::function<void(const Tableau&)>& visit,
                     const std::vector<int>* rowBound = nullptr);

// Schur polynomial in the variables x_lo..x_hi, optionally flagged by
// per-row upper bounds.
Polynomial schur(const Partition& lambda, int lo, int hi,
                 const std::vector<int>* rowBound = nullptr);
Polynomial skewSchur(const Partition& lambda, const Partition& mu, int lo, int hi,
                     const std::vector<int>* rowBound = nullptr);

// Jeu de taquin.  A forward slide moves the hole at an inner corner of mu
// outwards; a reverse slide moves a hole at an outer cell of lambda inwards
// and returns the inner cell it vacates.  Ties follow column strictness.
Tableau forwardSlide(const Tableau& t, Cell innerCorner);
Tableau reverseSlide(const Tableau& t, Cell outerCell, Cell* vacated = nullptr);
// Straightens a skew tableau by forward slides, always choosing the lowest
// inner corner first unless `lowestFirst` is false.
Tableau rectify(const Tableau& t, bool lowestFirst = true);

// Rotation by 180 degrees inside the bounding box of the shape, with each
// entry k replaced by d + 1 - k.  The result is a skew tableau.
Tableau rotateComplement(const Tableau& t, int d);

// Schuetzenberger evacuation over the alphabet [d]: rectification of the
// rotated complement.  Throws InvalidInput if an entry exceeds d.
Tableau evacuation(const Tableau& t, int d);

}  // namespace schubert
