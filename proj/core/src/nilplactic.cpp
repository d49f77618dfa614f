#include "schubert/nilplactic.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "schubert/error.hpp"
#include "schubert/word_ops.hpp"

namespace schubert {

Cell egInsert(Tableau& p, int x) {
  int r = 1;
  while (true) {
    const int len = p.rowLength(r);
    int c = 1;
    while (c <= len && p.at(r, c) <= x) ++c;
    if (c > len) {
      p.set(r, c, x);
      return {r, c};
    }
    const int y = p.at(r, c);
    if (y == x + 1 && c > 1 && p.at(r, c - 1) == x) {
      x = y;
    } else {
      p.set(r, c, x);
      x = y;
    }
    ++r;
  }
}

TableauPair edelmanGreene(std::span<const int> v) {
  requireReduced(v, "Edelman-Greene insertion");
  TableauPair out;
  int k = 0;
  for (int x : v) {
    const Cell c = egInsert(out.p, x);
    out.q.set(c.row, c.col, ++k);
  }
  return out;
}

Tableau egTableau(std::span<const int> v) { return edelmanGreene(v).p; }

int egUninsert(Tableau& p, Cell cell) {
  if (p.at(cell.row, cell.col) == 0 || cell.col != p.rowLength(cell.row) ||
      p.rowLength(cell.row + 1) >= cell.col) {
    throw InvalidInput("egUninsert needs an outer corner");
  }
  auto grid = p.grid();
  int y = grid[cell.row - 1].back();
  grid[cell.row - 1].pop_back();
  for (int r = cell.row - 1; r >= 1; --r) {
    auto& row = grid[r - 1];
    if (std::find(row.begin(), row.end(), y) != row.end()) {
      // Undo the rule that kept the row and carried y on.
      --y;
      continue;
    }
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.begin()) throw InvalidInput("not an insertion tableau");
    --it;
    std::swap(*it, y);
  }
  while (!grid.empty() && grid.back().empty()) grid.pop_back();
  p = Tableau(std::move(grid));
  return y;
}

TableauPair egConjugate(const Biword& w) {
  if (!isReverseAntilex(w)) throw InvalidInput("biword is not in reverse antilexicographic order");
  requireReduced(w.bottom, "biword bottom");
  TableauPair out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Cell c = egInsert(out.p, w.bottom[k]);
    out.q.set(c.col, c.row, w.top[k]);
  }
  return out;
}

Biword egConjugateInverse(const Tableau& p, const Tableau& q) {
  if (conjugate(p.shape()) != q.shape()) throw InvalidInput("tableaux of non-conjugate shapes");
  Tableau pp = p;
  Tableau qq = q;
  Biword w;
  while (qq.size() > 0) {
    // The last placed letter is the rightmost occurrence of the maximum.
    const int top = qq.maxEntry();
    Cell last{0, 0};
    for (int c = 1; c <= qq.rowLength(1); ++c) {
      const int len = qq.columnLength(c);
      if (qq.at(len, c) == top) last = {len, c};
    }
    auto grid = qq.grid();
    grid[last.row - 1].pop_back();
    while (!grid.empty() && grid.back().empty()) grid.pop_back();
    qq = Tableau(std::move(grid));
    w.top.push_back(top);
    w.bottom.push_back(egUninsert(pp, {last.col, last.row}));
  }
  std::reverse(w.top.begin(), w.top.end());
  std::reverse(w.bottom.begin(), w.bottom.end());
  return w;
}

std::vector<Word> coxeterKnuthClass(const Word& v) {
  requireReduced(v, "Coxeter-Knuth class");
  std::set<Word> seen{v};
  std::deque<Word> queue{v};
  while (!queue.empty()) {
    const Word u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 2 < u.size(); ++k) {
      const int a = u[k];
      const int b = u[k + 1];
      const int c = u[k + 2];
      Word x = u;
      if ((a < c && c < b) || (b < c && c < a)) {
        std::swap(x[k], x[k + 1]);
      } else if ((b < a && a < c) || (c < a && a < b)) {
        std::swap(x[k + 1], x[k + 2]);
      } else if (a == c && (b == a + 1 || b == a - 1)) {
        x = u;
        x[k] = b;
        x[k + 1] = a;
        x[k + 2] = b;
      } else {
        continue;
      }
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return {seen.begin(), seen.end()};
}

bool ckEquivalent(std::span<const int> u, std::span<const int> v) {
  return egTableau(u) == egTableau(v);
}

Word plactify(std::span<const int> v) {
  requireReduced(v, "plactification");
  Word out;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    out = sigmaWord(*it, out);
    out.insert(out.begin(), *it);
  }
  return out;
}

Word unplactify(std::span<const int> z) {
  if (z.empty()) return {};
  const int r = z.front();
  Word rest = unplactify(sigmaWord(r, z.subspan(1)));
  rest.insert(rest.begin(), r);
  return rest;
}

Word phiU(std::span<const int> u, std::span<const int> v) {
  Word out(v.begin(), v.end());
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    out = sigmaWord(*it, out);
    out.insert(out.begin(), *it);
  }
  return out;
}

namespace {

bool isColumn(const Column& c) {
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    if (c[k] <= c[k + 1]) return false;
  return true;
}

Word concat(const Column& a, const Column& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// Pulls a plactic column pair back along phi, keeping it only if it lies in
// the Coxeter-Knuth class of uv.
std::optional<ColumnPair> pullBack(const Column& u, const Column& v,
                                   const std::optional<ColumnPair>& image) {
  if (!image) return std::nullopt;
  const Word candidate = unplactify(concat(image->first, image->second));
  const auto split = candidate.begin() + static_cast<std::ptrdiff_t>(image->first.size());
  ColumnPair out{Column(candidate.begin(), split), Column(split, candidate.end())};
  if (!isColumn(out.first) || !isColumn(out.second) || !isReducedWord(candidate) ||
      !ckEquivalent(candidate, concat(u, v))) {
    return std::nullopt;
  }
  return out;
}

std::pair<Column, Column> plactifiedColumns(const Column& u, const Column& v) {
  const Word image = plactify(concat(u, v));
  const auto split = image.begin() + static_cast<std::ptrdiff_t>(u.size());
  return {Column(image.begin(), split), Column(split, image.end())};
}

}  // namespace

std::optional<ColumnPair> nilJdtColumns(const Column& u, const Column& v) {
  const auto [a, b] = plactifiedColumns(u, v);
  return pullBack(u, v, jdtColumns(a, b));
}

std::optional<ColumnPair> nilJdtInvColumns(const Column& u, const Column& v) {
  const auto [a, b] = plactifiedColumns(u, v);
  return pullBack(u, v, jdtInvColumns(a, b));
}

std::optional<ColumnPair> nilColumnPairBySearch(const Column& u, const Column& v, int leftLength) {
  std::optional<ColumnPair> found;
  for (const Word& x : coxeterKnuthClass(concat(u, v))) {
    if (leftLength < 0 || leftLength > static_cast<int>(x.size())) break;
    ColumnPair p{Column(x.begin(), x.begin() + leftLength), Column(x.begin() + leftLength, x.end())};
    if (!isColumn(p.first) || !isColumn(p.second)) continue;
    if (found && !(*found == p)) throw InternalError("two column pairs of equal shape in one class");
    found = p;
  }
  return found;
}

}  // namespace schubert
