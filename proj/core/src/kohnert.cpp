#include "schubert/kohnert.hpp"

#include <deque>

#include "schubert/error.hpp"
#include "schubert/stable_rc_graph.hpp"

namespace schubert {

Diagram permDiagram(const Permutation& w) {
  CellSet cells;
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) cells.insert({i, w(j)});
  return Diagram(std::move(cells));
}

std::optional<KohnertMove> kMoveOfRow(const Diagram& d, int row) {
  const CellSet& cells = d.cells();
  auto it = cells.lower_bound({row + 1, 0});
  if (it == cells.begin()) return std::nullopt;
  --it;
  if (it->row != row) return std::nullopt;
  const int col = it->col;
  for (int j = row - 1; j >= 1; --j)
    if (!cells.contains({j, col})) return KohnertMove{row, j, col};
  return std::nullopt;
}

std::vector<KohnertMove> kMoves(const Diagram& d) {
  std::vector<KohnertMove> out;
  for (int row = 1; row <= d.maxRow(); ++row)
    if (auto m = kMoveOfRow(d, row)) out.push_back(*m);
  return out;
}

Diagram applyKMove(const Diagram& d, const KohnertMove& m) {
  if (kMoveOfRow(d, m.from) != m) throw InvalidInput("not a Kohnert move of this diagram");
  CellSet cells = d.cells();
  cells.erase({m.from, m.col});
  cells.insert({m.to, m.col});
  return Diagram(std::move(cells));
}

std::set<Diagram> kohnertClosure(const Permutation& w) {
  std::set<Diagram> seen{permDiagram(w)};
  std::deque<Diagram> queue{permDiagram(w)};
  while (!queue.empty()) {
    const Diagram d = std::move(queue.front());
    queue.pop_front();
    for (const KohnertMove& m : kMoves(d)) {
      Diagram next = applyKMove(d, m);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

std::set<Diagram> phiSet(const Permutation& w) {
  std::set<Diagram> out;
  for (const RcGraph& r : enumerateAll(w)) out.insert(plactifyGraph(r));
  return out;
}

int firstAscent(const Permutation& w) {
  for (int i = 1; i < w.size(); ++i)
    if (w(i) < w(i + 1)) return i;
  throw InvalidInput("the longest element has no ascent");
}

std::vector<Diagram> bergeronPartialDiagram(const Diagram& b, const Permutation& w) {
  const int r = firstAscent(w);
  CellSet cells = b.cells();
  if (cells.erase({r, w(r)}) != 1) throw InvalidInput("diagram lacks the cell (r, w_r)");
  const DiagramPairing pairing = rPairing(cells, r);
  if (!pairing.unpairedLower.empty()) return {};
  std::vector<Diagram> out{Diagram(cells)};
  for (std::size_t k = 0; k < pairing.unpairedUpper.size(); ++k) out.push_back(*fDiagram(r, out.back()));
  return out;
}

std::vector<RcGraph> partialTildeRc(const RcGraph& g, const Permutation& w) {
  const int r = firstAscent(w);
  CellSet cells = g.cellSet();
  if (cells.erase({r, w(r)}) != 1) throw InvalidInput("rc-graph lacks the cross (r, w_r)");
  const RcGraph start = RcGraph::fromCrosses(std::vector<Cell>(cells.begin(), cells.end()), g.n());
  const DiagramPairing pairing = rPairing(cells, r);
  if (!pairing.unpairedLower.empty()) return {};
  std::vector<RcGraph> out{start};
  for (std::size_t k = 0; k < pairing.unpairedUpper.size(); ++k) {
    auto next = fTilde(r, out.back());
    if (!next) throw InternalError("f~ left the rc-graphs inside a divided difference");
    out.push_back(*next);
  }
  return out;
}

namespace {

// Applies `step` along the chain from the longest element down to w.
template <typename T, typename Step>
std::vector<T> descend(const Permutation& w, std::vector<T> start, Step step) {
  const int n = w.size();
  // Chain w = v_0, v_1 = v_0 s_{r_0}, ... up to the longest element.
  std::vector<Permutation> chain{w};
  while (chain.back().length() < n * (n - 1) / 2) {
    const Permutation& v = chain.back();
    chain.push_back(v.timesSimple(firstAscent(v)));
  }
  for (std::size_t k = chain.size() - 1; k-- > 0;) {
    std::vector<T> next;
    for (const T& x : start) {
      auto image = step(x, chain[k]);
      next.insert(next.end(), image.begin(), image.end());
    }
    start = std::move(next);
  }
  return start;
}

}  // namespace

std::vector<Diagram> phiByRecursion(const Permutation& w) {
  const Permutation top = Permutation::longest(w.size());
  return descend<Diagram>(w, {permDiagram(top)}, bergeronPartialDiagram);
}

std::vector<RcGraph> rcGraphsByRecursion(const Permutation& w) {
  const Permutation top = Permutation::longest(w.size());
  return descend<RcGraph>(w, {rTop(top)}, partialTildeRc);
}

Diagram endMap(const RcGraph& r) {
  if (!classify(r.permutation()).is321Avoiding) throw InvalidInput("end map needs a 321-avoiding permutation");
  const auto meet = traceLines(r.cellSet(), r.n());
  const Permutation w = r.permutation().embedded(r.n());
  CellSet cells;
  for (const Cell& c : r.crosses()) cells.insert({c.row, w(meet[c.row - 1][c.col - 1].fromBelow)});
  return Diagram(std::move(cells));
}

bool hasMixedLine(const RcGraph& r) {
  const auto meet = traceLines(r.cellSet(), r.n());
  std::vector<int> how(static_cast<std::size_t>(r.n()) + 1, 0);  // 1 horizontal, 2 vertical
  for (const Cell& c : r.crosses()) {
    const LineMeeting& m = meet[c.row - 1][c.col - 1];
    how[m.fromLeft] |= 1;
    how[m.fromBelow] |= 2;
  }
  for (int h : how)
    if (h == 3) return true;
  return false;
}

}  // namespace schubert
