#include "schubert/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

Diagram::Diagram(CellSet cells) : cells_(std::move(cells)) {
  for (const Cell& c : cells_)
    if (c.row < 1 || c.col < 1) throw InvalidInput("diagram cells must have positive coordinates");
}

Diagram Diagram::fromBiword(const Biword& w) {
  if (w.top.size() != w.bottom.size()) throw InvalidInput("biword rows differ in length");
  CellSet cells;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!cells.insert({w.top[k], w.bottom[k]}).second) throw InvalidInput("repeated biletter");
  }
  return Diagram(std::move(cells));
}

Biword Diagram::biword() const {
  std::vector<Cell> sorted(cells_.begin(), cells_.end());
  std::sort(sorted.begin(), sorted.end(), ReadingOrder{});
  Biword w;
  for (const Cell& c : sorted) {
    w.top.push_back(c.row);
    w.bottom.push_back(c.col);
  }
  return w;
}

Diagram Diagram::transposed() const {
  CellSet t;
  for (const Cell& c : cells_) t.insert({c.col, c.row});
  return Diagram(std::move(t));
}

std::vector<int> Diagram::rowCounts() const {
  std::vector<int> counts(maxRow(), 0);
  for (const Cell& c : cells_) ++counts[c.row - 1];
  return counts;
}

int Diagram::maxRow() const {
  int m = 0;
  for (const Cell& c : cells_) m = std::max(m, c.row);
  return m;
}

int Diagram::maxCol() const {
  int m = 0;
  for (const Cell& c : cells_) m = std::max(m, c.col);
  return m;
}

Polynomial Diagram::monomial() const { return Polynomial(Monomial(rowCounts())); }

std::string Diagram::toString() const {
  std::ostringstream os;
  const int rows = maxRow();
  const int cols = maxCol();
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) os << (contains({i, j}) ? '#' : '.');
    os << '\n';
  }
  return os.str();
}

DiagramPairing rPairing(const CellSet& cells, int r) {
  std::vector<Cell> scan;
  for (const Cell& c : cells)
    if (c.row == r || c.row == r + 1) scan.push_back(c);
  std::sort(scan.begin(), scan.end(), [](const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  DiagramPairing p;
  std::vector<Cell> open;
  for (const Cell& c : scan) {
    if (c.row == r) {
      open.push_back(c);
    } else if (open.empty()) {
      p.unpairedLower.push_back(c);
    } else {
      p.pairs.emplace_back(open.back(), c);
      open.pop_back();
    }
  }
  p.unpairedUpper = std::move(open);
  return p;
}

std::optional<Diagram> eDiagram(int r, const Diagram& d) {
  const DiagramPairing p = rPairing(d.cells(), r);
  if (p.unpairedLower.empty()) return std::nullopt;
  const Cell c = p.unpairedLower.back();
  CellSet cells = d.cells();
  cells.erase(c);
  cells.insert({r, c.col});
  return Diagram(std::move(cells));
}

std::optional<Diagram> fDiagram(int r, const Diagram& d) {
  const DiagramPairing p = rPairing(d.cells(), r);
  if (p.unpairedUpper.empty()) return std::nullopt;
  const Cell c = p.unpairedUpper.front();
  CellSet cells = d.cells();
  cells.erase(c);
  cells.insert({r + 1, c.col});
  return Diagram(std::move(cells));
}

Diagram sigmaDiagram(int r, const Diagram& d) {
  const DiagramPairing p = rPairing(d.cells(), r);
  const int lower = static_cast<int>(p.unpairedLower.size());
  const int upper = static_cast<int>(p.unpairedUpper.size());
  Diagram out = d;
  for (int k = 0; k < lower - upper; ++k) out = *eDiagram(r, out);
  for (int k = 0; k < upper - lower; ++k) out = *fDiagram(r, out);
  return out;
}

}  // namespace schubert
