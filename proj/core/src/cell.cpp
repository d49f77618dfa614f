#include "schubert/cell.hpp"

namespace schubert {

std::string toString(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::optional<Cell> ladderTarget(const CellSet& crosses, Cell p) {
  if (!crosses.contains(p) || crosses.contains({p.row, p.col + 1})) return std::nullopt;
  for (int r = p.row - 1; r >= 1; --r) {
    const bool a = crosses.contains({r, p.col});
    const bool b = crosses.contains({r, p.col + 1});
    if (a && b) continue;
    if (!a && !b) return Cell{r, p.col + 1};
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Cell> chuteTarget(const CellSet& crosses, Cell p, std::optional<int> minCol) {
  if (!crosses.contains(p) || crosses.contains({p.row + 1, p.col})) return std::nullopt;
  for (int c = p.col - 1; !minCol || c >= *minCol; --c) {
    const bool a = crosses.contains({p.row, c});
    const bool b = crosses.contains({p.row + 1, c});
    if (a && b) continue;
    if (!a && !b) return Cell{p.row + 1, c};
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Cell> inverseChuteTarget(const CellSet& crosses, Cell p) {
  const int r = p.row - 1;
  if (!crosses.contains(p) || crosses.contains({r, p.col})) return std::nullopt;
  for (int c = p.col + 1;; ++c) {
    const bool a = crosses.contains({r, c});
    const bool b = crosses.contains({p.row, c});
    if (a && b) continue;
    if (!a && !b) return Cell{r, c};
    return std::nullopt;
  }
}

}  // namespace schubert
