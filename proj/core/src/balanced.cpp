#include "schubert/balanced.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "schubert/error.hpp"
#include "schubert/kohnert.hpp"
#include "schubert/stable_rc_graph.hpp"

namespace schubert {

Labeling balancedLabelOf(const RcGraph& r) {
  const int n = r.n();
  const Permutation w = r.permutation().embedded(n);
  const Permutation winv = w.inverse();
  const Word red = r.red();
  const Word comp = r.comp();
  std::vector<int> u(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = i + 1;
  Labeling out;
  for (std::size_t k = 0; k < red.size(); ++k) {
    const auto a = static_cast<std::size_t>(red[k]);
    const int x = u[a - 1];
    const int y = u[a];
    if (x > y) throw InternalError("word is not reduced");
    std::swap(u[a - 1], u[a]);
    out[{winv(y), x}] = comp[k];
  }
  return out;
}

bool isHookBalanced(const Labeling& labels, const Diagram& d) {
  for (const Cell& corner : d.cells()) {
    std::vector<int> hook;
    int arm = 0;
    for (const Cell& c : d.cells()) {
      if (c.row == corner.row && c.col > corner.col) {
        hook.push_back(labels.at(c));
        ++arm;
      } else if (c.col == corner.col && c.row > corner.row) {
        hook.push_back(labels.at(c));
      }
    }
    hook.push_back(labels.at(corner));
    std::sort(hook.begin(), hook.end());
    if (hook[static_cast<std::size_t>(arm)] != labels.at(corner)) return false;
  }
  return true;
}

bool isBalanced(const Labeling& labels, const Diagram& d) {
  if (labels.size() != d.size()) return false;
  std::set<Cell> seen;
  for (const auto& [c, v] : labels) {
    if (!d.contains(c) || v < 1 || v > c.row) return false;
    if (!seen.insert({c.col, v}).second) return false;  // column-strict
  }
  return isHookBalanced(labels, d);
}

std::vector<Labeling> allBalancedLabelings(const Permutation& w) {
  const Diagram d = permDiagram(w);
  // Bottom to top, right to left: each hook is complete when its corner is
  // labelled.
  std::vector<Cell> order(d.cells().rbegin(), d.cells().rend());
  std::vector<Labeling> out;
  Labeling cur;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(cur);
      return;
    }
    const Cell c = order[k];
    for (int v = 1; v <= c.row; ++v) {
      bool clash = false;
      for (const auto& [other, label] : cur)
        if (other.col == c.col && label == v) clash = true;
      if (clash) continue;
      cur[c] = v;
      std::vector<int> hook{v};
      int arm = 0;
      for (const auto& [other, label] : cur) {
        if (other.row == c.row && other.col > c.col) {
          hook.push_back(label);
          ++arm;
        } else if (other.col == c.col && other.row > c.row) {
          hook.push_back(label);
        }
      }
      std::sort(hook.begin(), hook.end());
      if (hook[static_cast<std::size_t>(arm)] == v) place(k + 1);
      cur.erase(c);
    }
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial labelingMonomial(const Labeling& labels) {
  Word rows;
  for (const auto& [c, v] : labels) rows.push_back(v);
  return Polynomial::fromRowMultiset(rows);
}

RowContent rowContent(const Labeling& labels, int n) {
  RowContent t(static_cast<std::size_t>(n));
  for (const auto& [c, v] : labels) {
    if (c.row < 1 || c.row > n) throw InvalidInput("label outside rows 1..n");
    t[static_cast<std::size_t>(c.row - 1)].push_back(v);
  }
  for (Word& row : t) std::sort(row.rbegin(), row.rend());
  return t;
}

RowContent rowContentOfGraph(const RcGraph& r) {
  const int n = r.n();
  RowContent t(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int i = k;
    int j = 1;
    bool right = true;
    while (i >= 1) {
      const bool cross = r.contains({i, j});
      if (cross && right) t[static_cast<std::size_t>(k - 1)].push_back(i);
      if (!cross) right = !right;
      if (right) {
        ++j;
      } else {
        --i;
      }
    }
  }
  return t;
}

std::vector<RowContent> rowContentBlocks(const RowContent& t, const Permutation& w) {
  std::vector<RowContent> out;
  std::size_t start = 0;
  for (int d : w.descents()) {
    const auto end = static_cast<std::size_t>(d);
    if (end > t.size()) throw InvalidInput("row content shorter than the last descent");
    out.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(start), t.begin() + static_cast<std::ptrdiff_t>(end));
    start = end;
  }
  return out;
}

bool isReverseSsytBlock(const RowContent& block) {
  for (std::size_t k = 0; k < block.size(); ++k) {
    if (!std::is_sorted(block[k].rbegin(), block[k].rend())) return false;
    if (k + 1 == block.size()) continue;
    if (block[k].size() > block[k + 1].size()) return false;
    for (std::size_t c = 0; c < block[k].size(); ++c)
      if (block[k][c] >= block[k + 1][c]) return false;
  }
  return true;
}

RcGraph graphFromRowContent(const RowContent& t, const Permutation& w) {
  const int n = w.size();
  if (static_cast<int>(t.size()) > n) throw InvalidInput("row content longer than n");
  CellSet horizontal;
  auto inside = [n](int i, int j) { return i >= 1 && j >= 1 && i + j <= n + 1; };
  for (int k = 1; k <= n; ++k) {
    std::map<int, int> counts;
    if (k <= static_cast<int>(t.size()))
      for (int row : t[static_cast<std::size_t>(k - 1)]) ++counts[row];
    int i = k;
    int j = 1;
    bool first = true;
    while (i >= 1) {
      if (!inside(i, j)) throw InvalidInput("line left the staircase");
      if (horizontal.contains({i, j})) {
        --i;
        first = false;
        continue;
      }
      const int passes = counts[i];
      counts[i] = 0;
      const int from = first ? j : j + 1;
      for (int c = from; c < from + passes; ++c) {
        if (!inside(i, c) || !horizontal.insert({i, c}).second) throw InvalidInput("line routing failed");
      }
      j = from + passes;
      if (!inside(i, j) || horizontal.contains({i, j})) throw InvalidInput("line routing failed");
      --i;
      first = false;
    }
    for (const auto& [row, left] : counts)
      if (left != 0) throw InvalidInput("row content names a row the line never reaches");
  }
  RcGraph g;
  try {
    g = RcGraph::fromCrosses(std::vector<Cell>(horizontal.begin(), horizontal.end()), n);
  } catch (const NotReduced&) {
    throw InvalidInput("row content does not give a reduced rc-graph");
  }
  if (g.permutation().embedded(n) != w) throw InvalidInput("row content gives a different permutation");
  return g;
}

namespace {

void require321Avoiding(const RcGraph& r) {
  if (!classify(r.permutation()).is321Avoiding) throw InvalidInput("needs a 321-avoiding permutation");
}

}  // namespace

Tableau mirroredLabeling(const RcGraph& r) {
  require321Avoiding(r);
  const Labeling labels = balancedLabelOf(r);
  std::set<int> rows;
  std::set<int> cols;
  for (const auto& [c, v] : labels) {
    rows.insert(c.row);
    cols.insert(c.col);
  }
  const std::vector<int> rowList(rows.begin(), rows.end());
  const std::vector<int> colList(cols.begin(), cols.end());
  const int width = static_cast<int>(colList.size());
  std::vector<std::map<int, int>> grid(rowList.size());
  for (const auto& [c, v] : labels) {
    const auto ri = static_cast<std::size_t>(std::lower_bound(rowList.begin(), rowList.end(), c.row) - rowList.begin());
    const int ci = static_cast<int>(std::lower_bound(colList.begin(), colList.end(), c.col) - colList.begin()) + 1;
    grid[ri][width + 1 - ci] = v;
  }
  Partition inner;
  std::vector<std::vector<int>> filled;
  for (const auto& row : grid) {
    const int lo = row.begin()->first;
    const int hi = row.rbegin()->first;
    if (hi - lo + 1 != static_cast<int>(row.size())) throw InternalError("compressed diagram row has a gap");
    inner.push_back(lo - 1);
    std::vector<int> entries;
    for (const auto& [c, v] : row) entries.push_back(v);
    filled.push_back(std::move(entries));
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return Tableau::skew(inner, filled);
}

Tableau revtabTableau(const RcGraph& r) {
  if (r.size() == 0) return Tableau();
  return rectify(mirroredLabeling(r));
}

Tableau revtabGrassmannian(const RcGraph& r) {
  const Permutation w = r.permutation();
  const auto descents = w.descents();
  if (descents.size() > 1) throw InvalidInput("needs a Grassmannian permutation");
  if (descents.empty()) return Tableau();
  const int d = *descents.begin();
  const Labeling labels = balancedLabelOf(r);
  std::map<int, std::vector<int>> rows;
  for (const auto& [c, v] : labels) rows[c.row].push_back(d + 1 - v);
  std::vector<std::vector<int>> english;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) english.push_back(it->second);
  return evacuation(Tableau(english), d);
}

bool revtabCheck(const RcGraph& r) {
  require321Avoiding(r);
  const Tableau q = StableRcGraph::fromRcGraph(r).egPair().q;
  if (classify(r.permutation()).isGrassmannian && !(q == revtabGrassmannian(r))) return false;
  return q == revtabTableau(r);
}

}  // namespace schubert
