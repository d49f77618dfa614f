#include "schubert/stable_rc_graph.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/nilplactic.hpp"

namespace schubert {

StableRcGraph StableRcGraph::fromBiword(const Biword& w, int m) {
  if (!isReverseAntilex(w)) throw InvalidInput("biword is not in reverse antilexicographic order");
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w.top[k] < 1 || w.bottom[k] < 1) throw InvalidInput("biword letters must be positive");
    cells.push_back({w.top[k], w.bottom[k] - w.top[k] + 1});
    m = std::max(m, w.top[k]);
  }
  return fromCells(std::move(cells), m);
}

StableRcGraph StableRcGraph::fromRcGraph(const RcGraph& r) {
  return fromCells(r.crosses(), std::max(r.n() - 1, 0));
}

StableRcGraph StableRcGraph::fromCells(std::vector<Cell> cells, int m) {
  std::sort(cells.begin(), cells.end(), ReadingOrder{});
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) throw InvalidInput("repeated cross");
  StableRcGraph g;
  Word red;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.row > m) throw InvalidInput("cross row outside [1, m]");
    if (c.row + c.col - 1 < 1) throw InvalidInput("cross letter must be positive");
    red.push_back(c.row + c.col - 1);
  }
  requireReduced(red, "stable rc-graph word");
  g.cells_ = std::move(cells);
  g.m_ = m;
  g.perm_ = permutationOfWord(red);
  return g;
}

Biword StableRcGraph::biword() const {
  Biword w;
  for (const Cell& c : cells_) {
    w.top.push_back(c.row);
    w.bottom.push_back(c.row + c.col - 1);
  }
  return w;
}

Word StableRcGraph::red() const { return biword().bottom; }
Word StableRcGraph::scomp() const { return biword().top; }

Word StableRcGraph::redRow(int i) const {
  Word w;
  for (const Cell& c : cells_)
    if (c.row == i) w.push_back(c.row + c.col - 1);
  return w;
}

Polynomial StableRcGraph::monomial() const {
  const Word rows = scomp();
  return Polynomial::fromRowMultiset(rows);
}

std::vector<Cell> StableRcGraph::pictureCrosses() const {
  std::vector<Cell> out;
  for (const Cell& c : cells_) out.push_back({c.row, c.col + m_});
  return out;
}

bool StableRcGraph::isRcGraph() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.col >= 1; });
}

RcGraph StableRcGraph::toRcGraph(int n) const {
  if (!isRcGraph()) throw InvalidInput("semicompatible sequence is not compatible");
  return RcGraph::fromCrosses(cells_, std::max(n, this->n()));
}

TableauPair StableRcGraph::egPair() const { return egConjugate(biword()); }

std::string StableRcGraph::toString() const {
  std::ostringstream os;
  const Biword w = biword();
  os << joinWord(w.top) << " / " << joinWord(w.bottom);
  return os.str();
}

bool operator<(const StableRcGraph& a, const StableRcGraph& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_;
  return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                                      b.cells_.end(), ReadingOrder{});
}

DiagramPairing rPairing(const StableRcGraph& g, int r) {
  // Shift into positive columns so the diagram scan applies verbatim.
  int shift = 0;
  for (const Cell& c : g.cells()) shift = std::max(shift, 1 - c.col);
  CellSet shifted;
  for (const Cell& c : g.cells()) shifted.insert({c.row, c.col + shift});
  DiagramPairing p = rPairing(shifted, r);
  auto back = [shift](Cell& c) { c.col -= shift; };
  for (auto& [a, b] : p.pairs) {
    back(a);
    back(b);
  }
  for (Cell& c : p.unpairedLower) back(c);
  for (Cell& c : p.unpairedUpper) back(c);
  return p;
}

namespace {

StableRcGraph moved(const StableRcGraph& g, Cell from, Cell to) {
  std::vector<Cell> cells = g.cells();
  *std::find(cells.begin(), cells.end(), from) = to;
  StableRcGraph out = StableRcGraph::fromCells(std::move(cells), g.m());
  if (out.permutation() != g.permutation()) throw InternalError("chute move changed the permutation");
  return out;
}

}  // namespace

std::optional<StableRcGraph> eTilde(int r, const StableRcGraph& g) {
  if (r < 1 || r >= g.m()) return std::nullopt;
  const DiagramPairing p = rPairing(g, r);
  if (p.unpairedLower.empty()) return std::nullopt;
  const Cell c = p.unpairedLower.back();
  const auto target = inverseChuteTarget(g.cellSet(), c);
  if (!target) throw InternalError("no inverse chute move for an unpaired cross");
  return moved(g, c, *target);
}

std::optional<StableRcGraph> fTilde(int r, const StableRcGraph& g) {
  if (r < 1 || r >= g.m()) return std::nullopt;
  const DiagramPairing p = rPairing(g, r);
  if (p.unpairedUpper.empty()) return std::nullopt;
  const Cell c = p.unpairedUpper.front();
  const auto target = chuteTarget(g.cellSet(), c, std::nullopt);
  if (!target) throw InternalError("no chute move for an unpaired cross");
  return moved(g, c, *target);
}

StableRcGraph sigmaTilde(int r, const StableRcGraph& g) {
  const DiagramPairing p = rPairing(g, r);
  const int lower = static_cast<int>(p.unpairedLower.size());
  const int upper = static_cast<int>(p.unpairedUpper.size());
  StableRcGraph out = g;
  for (int k = 0; k < lower - upper; ++k) out = *eTilde(r, out);
  for (int k = 0; k < upper - lower; ++k) out = *fTilde(r, out);
  return out;
}

namespace {

std::optional<StableRcGraph> tildePlus(int r, const StableRcGraph& g, bool up) {
  if (r < 1 || r >= g.m()) return std::nullopt;
  auto cols = biwordColumns(g.biword(), g.m());
  auto pair = up ? nilJdtColumns(cols[r - 1], cols[r]) : nilJdtInvColumns(cols[r - 1], cols[r]);
  if (!pair) return std::nullopt;
  cols[r - 1] = pair->first;
  cols[r] = pair->second;
  return StableRcGraph::fromBiword(biwordFromColumns(cols), g.m());
}

std::optional<RcGraph> asRcGraph(const std::optional<StableRcGraph>& s, int n) {
  if (!s || !s->isRcGraph()) return std::nullopt;
  return s->toRcGraph(n);
}

}  // namespace

std::optional<StableRcGraph> eTildePlus(int r, const StableRcGraph& g) { return tildePlus(r, g, true); }
std::optional<StableRcGraph> fTildePlus(int r, const StableRcGraph& g) { return tildePlus(r, g, false); }

std::optional<RcGraph> eTilde(int r, const RcGraph& g) {
  return asRcGraph(eTilde(r, StableRcGraph::fromRcGraph(g)), g.n());
}

std::optional<RcGraph> fTilde(int r, const RcGraph& g) {
  return asRcGraph(fTilde(r, StableRcGraph::fromRcGraph(g)), g.n());
}

Diagram plactifyGraph(const StableRcGraph& g) {
  const Biword w = g.biword();
  return Diagram::fromBiword({w.top, plactify(w.bottom)});
}

Diagram plactifyGraph(const RcGraph& g) {
  const Word red = g.red();
  return Diagram::fromBiword({g.comp(), plactify(red)});
}

}  // namespace schubert
