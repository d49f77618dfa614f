#include <algorithm>

#include "schubert/diagram.hpp"
#include "schubert/error.hpp"

namespace schubert {

namespace {

// Entry j (1-based from the top, i.e. the j-th smallest) of a column.
int fromTop(const Column& u, int j) { return u[u.size() - j]; }

void requireColumn(const Column& u) {
  for (std::size_t k = 0; k + 1 < u.size(); ++k)
    if (u[k] <= u[k + 1]) throw InvalidInput("column must be strictly decreasing");
}

ColumnPair readColumns(const Tableau& t) {
  ColumnPair out;
  for (int v : t.column(1)) out.first.push_back(v);
  for (int v : t.column(2)) out.second.push_back(v);
  std::reverse(out.first.begin(), out.first.end());
  std::reverse(out.second.begin(), out.second.end());
  return out;
}

}  // namespace

int columnOverlap(const Column& u, const Column& v) {
  requireColumn(u);
  requireColumn(v);
  const int s = static_cast<int>(u.size());
  const int t = static_cast<int>(v.size());
  for (int i = std::max(0, t - s); i <= t; ++i) {
    bool fits = true;
    for (int j = 1; j <= t - i && fits; ++j) fits = fromTop(u, j) <= fromTop(v, i + j);
    if (fits) return i;
  }
  throw InternalError("no column overlap found");
}

Tableau columnPairTableau(const Column& u, const Column& v) {
  const int s = static_cast<int>(u.size());
  const int t = static_cast<int>(v.size());
  const int i = columnOverlap(u, v);
  Tableau out;
  const int rows = std::max(t, i + s);
  for (int r = 1; r <= rows; ++r) {
    const bool left = r > i && r <= i + s;
    const bool right = r <= t;
    if (left || right) out.set(r, 1, left ? fromTop(u, r - i) : 0);
    if (right) out.set(r, 2, fromTop(v, r));
  }
  return out;
}

std::optional<ColumnPair> jdtColumns(const Column& u, const Column& v) {
  const int i = columnOverlap(u, v);
  if (i == 0) return std::nullopt;
  return readColumns(forwardSlide(columnPairTableau(u, v), {i, 1}));
}

std::optional<ColumnPair> jdtInvColumns(const Column& u, const Column& v) {
  const int s = static_cast<int>(u.size());
  const int t = static_cast<int>(v.size());
  const int i = columnOverlap(u, v);
  if (i == t - s) return std::nullopt;
  return readColumns(reverseSlide(columnPairTableau(u, v), {t + 1, 2}));
}

std::vector<Column> biwordColumns(const Biword& w, int p) {
  if (!isReverseAntilex(w)) throw InvalidInput("biword is not in reverse antilexicographic order");
  std::vector<Column> cols(p);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w.top[k] < 1 || w.top[k] > p) throw InvalidInput("biword top letter out of range");
    cols[w.top[k] - 1].push_back(w.bottom[k]);
  }
  return cols;
}

Biword biwordFromColumns(const std::vector<Column>& cols) {
  Biword w;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (int v : cols[k]) {
      w.top.push_back(static_cast<int>(k) + 1);
      w.bottom.push_back(v);
    }
  }
  return w;
}

namespace {

int topBound(const Biword& w, int r) {
  int p = r + 1;
  for (int a : w.top) p = std::max(p, a);
  return p;
}

}  // namespace

std::optional<Biword> ePlus(int r, const Biword& w) {
  auto cols = biwordColumns(w, topBound(w, r));
  auto pair = jdtColumns(cols[r - 1], cols[r]);
  if (!pair) return std::nullopt;
  cols[r - 1] = pair->first;
  cols[r] = pair->second;
  return biwordFromColumns(cols);
}

std::optional<Biword> fPlus(int r, const Biword& w) {
  auto cols = biwordColumns(w, topBound(w, r));
  auto pair = jdtInvColumns(cols[r - 1], cols[r]);
  if (!pair) return std::nullopt;
  cols[r - 1] = pair->first;
  cols[r] = pair->second;
  return biwordFromColumns(cols);
}

std::vector<ColumnPlacement> biwordShape(const Biword& w) {
  int p = 0;
  for (int a : w.top) p = std::max(p, a);
  const auto cols = biwordColumns(w, p);
  std::vector<ColumnPlacement> out;
  int top = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k > 0) top -= columnOverlap(cols[k - 1], cols[k]);
    out.push_back({top, static_cast<int>(cols[k].size())});
  }
  int highest = 1;
  for (const auto& c : out) highest = std::min(highest, c.top);
  for (auto& c : out) c.top += 1 - highest;
  return out;
}

}  // namespace schubert
