#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace schubert {

// A position (row, col) in matrix coordinates, 1-based.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Reading order of crosses: top row first, right to left within a row.
struct ReadingOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  }
};

inline bool readingLess(const Cell& a, const Cell& b) { return ReadingOrder{}(a, b); }

std::string toString(const Cell& c);

using CellSet = std::set<Cell>;

// The cell set of crosses with geometric moves shared by rc-graphs and
// stable rc-graphs.  None of these check any bounding region.

// Ladder move of the cross p: (p.row, p.col) -> (p.row - m, p.col + 1).
// Requires (p.row, p.col + 1) empty, rows strictly between fully occupied
// in columns p.col, p.col + 1, and the target row empty in both; the scan
// stops at row 1.
std::optional<Cell> ladderTarget(const CellSet& crosses, Cell p);

// Chute move of the cross p: (p.row, p.col) -> (p.row + 1, p.col - m),
// the transpose of a ladder move.  Column scanning is unbounded to the left
// when `minCol` is not given.
std::optional<Cell> chuteTarget(const CellSet& crosses, Cell p,
                                std::optional<int> minCol = 1);

// Inverse of a chute move: (r + 1, c) -> (r, c') with c' > c.
std::optional<Cell> inverseChuteTarget(const CellSet& crosses, Cell p);

}  // namespace schubert
