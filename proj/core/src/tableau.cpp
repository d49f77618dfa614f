#include "schubert/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

void checkShape(const std::vector<std::vector<int>>& grid) {
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (r > 0 && grid[r].size() > grid[r - 1].size()) {
      throw InvalidInput("row lengths must weakly decrease");
    }
  }
}

void trimRows(std::vector<std::vector<int>>& grid) {
  while (!grid.empty() && grid.back().empty()) grid.pop_back();
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : grid_(std::move(rows)) {
  trimRows(grid_);
  checkShape(grid_);
  for (const auto& row : grid_)
    for (int v : row)
      if (v < 1) throw InvalidInput("tableau entries must be positive");
}

Tableau Tableau::skew(const Partition& inner, const std::vector<std::vector<int>>& rows) {
  Tableau t;
  const std::size_t m = std::max(inner.size(), rows.size());
  for (std::size_t r = 0; r < m; ++r) {
    const int mu = r < inner.size() ? inner[r] : 0;
    if (mu < 0) throw InvalidInput("negative inner part");
    std::vector<int> row(mu, 0);
    if (r < rows.size()) {
      for (int v : rows[r]) {
        if (v < 1) throw InvalidInput("tableau entries must be positive");
        row.push_back(v);
      }
    }
    t.grid_.push_back(std::move(row));
  }
  trimRows(t.grid_);
  checkShape(t.grid_);
  const Partition mu = t.inner();
  for (std::size_t r = 1; r < mu.size(); ++r)
    if (mu[r] > mu[r - 1]) throw InvalidInput("inner shape is not a partition");
  return t;
}

Partition Tableau::shape() const {
  Partition p;
  for (const auto& row : grid_) p.push_back(static_cast<int>(row.size()));
  return p;
}

Partition Tableau::inner() const {
  Partition p;
  for (const auto& row : grid_) {
    int k = 0;
    while (k < static_cast<int>(row.size()) && row[k] == 0) ++k;
    p.push_back(k);
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool Tableau::isStraight() const { return inner().empty(); }

int Tableau::size() const {
  int k = 0;
  for (const auto& row : grid_)
    for (int v : row) k += v > 0 ? 1 : 0;
  return k;
}

int Tableau::at(int r, int c) const {
  if (r < 1 || r > numRows() || c < 1 || c > rowLength(r)) return 0;
  return grid_[r - 1][c - 1];
}

int Tableau::rowLength(int r) const {
  return r >= 1 && r <= numRows() ? static_cast<int>(grid_[r - 1].size()) : 0;
}

int Tableau::columnLength(int c) const {
  int k = 0;
  while (k < numRows() && rowLength(k + 1) >= c) ++k;
  return k;
}

std::vector<std::vector<int>> Tableau::rowEntries() const {
  std::vector<std::vector<int>> rows;
  for (const auto& row : grid_) {
    std::vector<int> filled;
    for (int v : row)
      if (v > 0) filled.push_back(v);
    rows.push_back(std::move(filled));
  }
  return rows;
}

std::vector<int> Tableau::column(int c) const {
  std::vector<int> col;
  for (int r = 1; r <= numRows() && rowLength(r) >= c; ++r)
    if (at(r, c) > 0) col.push_back(at(r, c));
  return col;
}

bool Tableau::isSemistandard() const {
  for (int r = 1; r <= numRows(); ++r) {
    for (int c = 1; c <= rowLength(r); ++c) {
      const int v = at(r, c);
      if (v == 0) continue;
      if (c > 1 && at(r, c - 1) > v) return false;
      if (r > 1 && at(r - 1, c) >= v) return false;
    }
  }
  return true;
}

int Tableau::maxEntry() const {
  int m = 0;
  for (const auto& row : grid_)
    for (int v : row) m = std::max(m, v);
  return m;
}

Word Tableau::rowWord() const {
  Word w;
  for (int r = numRows(); r >= 1; --r)
    for (int v : grid_[r - 1])
      if (v > 0) w.push_back(v);
  return w;
}

Word Tableau::columnWord() const {
  Word w;
  const int width = rowLength(1);
  for (int c = 1; c <= width; ++c) {
    for (int r = columnLength(c); r >= 1; --r)
      if (at(r, c) > 0) w.push_back(at(r, c));
  }
  return w;
}

Composition Tableau::content(int d) const {
  Composition alpha(std::max(d, maxEntry()), 0);
  for (const auto& row : grid_)
    for (int v : row)
      if (v > 0) ++alpha[v - 1];
  return alpha;
}

Polynomial Tableau::monomial() const { return Polynomial(Monomial(content())); }

Tableau Tableau::transposed() const {
  if (!isStraight()) throw InvalidInput("transpose of a skew tableau");
  std::vector<std::vector<int>> cols;
  const int width = rowLength(1);
  for (int c = 1; c <= width; ++c) cols.push_back(column(c));
  Tableau t;
  t.grid_ = std::move(cols);
  return t;
}

Tableau Tableau::withRowWord(const Word& w) const {
  if (static_cast<int>(w.size()) != size()) throw InvalidInput("word length does not match shape");
  Tableau t = *this;
  std::size_t k = 0;
  for (int r = numRows(); r >= 1; --r)
    for (int& v : t.grid_[r - 1])
      if (v > 0) v = w[k++];
  return t;
}

Tableau Tableau::withColumnWord(const Word& w) const {
  if (static_cast<int>(w.size()) != size()) throw InvalidInput("word length does not match shape");
  Tableau t = *this;
  std::size_t k = 0;
  const int width = rowLength(1);
  for (int c = 1; c <= width; ++c)
    for (int r = columnLength(c); r >= 1; --r)
      if (t.grid_[r - 1][c - 1] > 0) t.grid_[r - 1][c - 1] = w[k++];
  return t;
}

void Tableau::set(int r, int c, int value) {
  if (r < 1 || c < 1) throw InvalidInput("cell index must be positive");
  if (r > numRows()) grid_.resize(r);
  auto& row = grid_[r - 1];
  if (c > static_cast<int>(row.size()) + 1) throw InvalidInput("gap in tableau row");
  if (c == static_cast<int>(row.size()) + 1) {
    row.push_back(value);
  } else {
    row[c - 1] = value;
  }
}

std::string Tableau::toString() const {
  std::ostringstream os;
  for (int r = 1; r <= numRows(); ++r) {
    if (r > 1) os << " / ";
    for (int c = 1; c <= rowLength(r); ++c) {
      if (c > 1) os << ' ';
      if (at(r, c) == 0) {
        os << '.';
      } else {
        os << at(r, c);
      }
    }
  }
  return os.str();
}

bool entrywiseLeq(const Tableau& a, const Tableau& b) {
  if (a.shape() != b.shape() || a.inner() != b.inner()) {
    throw InvalidInput("entrywise comparison of tableaux of different shapes");
  }
  for (int r = 1; r <= a.numRows(); ++r)
    for (int c = 1; c <= a.rowLength(r); ++c)
      if (a.at(r, c) > b.at(r, c)) return false;
  return true;
}

Tableau superstandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    rows.emplace_back(lambda[r], static_cast<int>(r) + 1);
  return Tableau(std::move(rows));
}

Tableau fromColumns(const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows;
  for (const auto& col : cols) {
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      rows[r].push_back(col[r]);
    }
  }
  return Tableau(std::move(rows));
}

Partition conjugate(const Partition& lambda) {
  Partition p;
  const int width = lambda.empty() ? 0 : lambda.front();
  for (int c = 1; c <= width; ++c) {
    int k = 0;
    for (int part : lambda) k += part >= c ? 1 : 0;
    p.push_back(k);
  }
  return p;
}

namespace {

struct SsytFiller {
  const std::vector<int>& mu;
  int lo;
  int hi;
  const std::vector<int>* rowBound;
  const std::function<void(const Tableau&)>& visit;
  std::vector<Cell> cells;
  std::vector<std::vector<int>> grid;

  void run(std::size_t k) {
    if (k == cells.size()) {
      visit(Tableau::skew(mu, strip()));
      return;
    }
    const auto [r, c] = cells[k];
    int low = lo;
    if (c > 1 && grid[r - 1][c - 2] > 0) low = std::max(low, grid[r - 1][c - 2]);
    if (r > 1 && static_cast<int>(grid[r - 2].size()) >= c && grid[r - 2][c - 1] > 0) {
      low = std::max(low, grid[r - 2][c - 1] + 1);
    }
    int high = hi;
    if (rowBound != nullptr && r <= static_cast<int>(rowBound->size())) {
      high = std::min(high, (*rowBound)[r - 1]);
    }
    for (int v = low; v <= high; ++v) {
      grid[r - 1][c - 1] = v;
      run(k + 1);
    }
    grid[r - 1][c - 1] = 0;
  }

  std::vector<std::vector<int>> strip() const {
    std::vector<std::vector<int>> rows;
    for (const auto& row : grid) {
      std::vector<int> filled;
      for (int v : row)
        if (v > 0) filled.push_back(v);
      rows.push_back(std::move(filled));
    }
    return rows;
  }
};

}  // namespace

void forEachSkewSsyt(const Partition& lambda, const Partition& mu, int lo, int hi,
                     const std::function<void(const Tableau&)>& visit,
                     const std::vector<int>* rowBound) {
  SsytFiller f{mu, lo, hi, rowBound, visit, {}, {}};
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    f.grid.emplace_back(lambda[r], 0);
    const int m = r < mu.size() ? mu[r] : 0;
    if (m > lambda[r]) throw InvalidInput("inner shape not contained in outer shape");
    for (int c = m + 1; c <= lambda[r]; ++c) f.cells.push_back({static_cast<int>(r) + 1, c});
  }
  f.run(0);
}

void forEachSsyt(const Partition& lambda, int lo, int hi,
                 const std::function<void(const Tableau&)>& visit,
                 const std::vector<int>* rowBound) {
  forEachSkewSsyt(lambda, {}, lo, hi, visit, rowBound);
}

std::vector<Tableau> allSsyt(const Partition& lambda, int lo, int hi,
                             const std::vector<int>* rowBound) {
  std::vector<Tableau> out;
  forEachSsyt(lambda, lo, hi, [&](const Tableau& t) { out.push_back(t); }, rowBound);
  return out;
}

Polynomial schur(const Partition& lambda, int lo, int hi, const std::vector<int>* rowBound) {
  return skewSchur(lambda, {}, lo, hi, rowBound);
}

Polynomial skewSchur(const Partition& lambda, const Partition& mu, int lo, int hi,
                     const std::vector<int>* rowBound) {
  Polynomial p;
  forEachSkewSsyt(lambda, mu, lo, hi, [&](const Tableau& t) { p += t.monomial(); }, rowBound);
  return p;
}

Tableau forwardSlide(const Tableau& t, Cell hole) {
  auto grid = t.grid();
  auto len = [&](int r) { return r <= static_cast<int>(grid.size()) ? static_cast<int>(grid[r - 1].size()) : 0; };
  if (hole.row < 1 || hole.col < 1 || hole.col > len(hole.row) || grid[hole.row - 1][hole.col - 1] != 0 ||
      (hole.col < len(hole.row) && grid[hole.row - 1][hole.col] == 0) ||
      (hole.col <= len(hole.row + 1) && grid[hole.row][hole.col - 1] == 0)) {
    throw InvalidInput("forward slide must start at an inner corner");
  }
  auto [r, c] = hole;
  while (true) {
    const bool hasBelow = c <= len(r + 1);
    const bool hasRight = c + 1 <= len(r);
    if (!hasBelow && !hasRight) break;
    const int below = hasBelow ? grid[r][c - 1] : 0;
    const int right = hasRight ? grid[r - 1][c] : 0;
    if (hasBelow && (!hasRight || below <= right)) {
      grid[r - 1][c - 1] = below;
      ++r;
    } else {
      grid[r - 1][c - 1] = right;
      ++c;
    }
  }
  grid[r - 1].pop_back();
  trimRows(grid);
  Tableau out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j) out.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, grid[i][j]);
  return out;
}

Tableau reverseSlide(const Tableau& t, Cell hole, Cell* vacated) {
  auto grid = t.grid();
  auto len = [&](int r) { return r <= static_cast<int>(grid.size()) ? static_cast<int>(grid[r - 1].size()) : 0; };
  if (hole.row < 1 || hole.col != len(hole.row) + 1 ||
      (hole.row > 1 && len(hole.row - 1) < hole.col)) {
    throw InvalidInput("reverse slide must start at an outer cell");
  }
  if (hole.row > static_cast<int>(grid.size())) grid.resize(hole.row);
  grid[hole.row - 1].push_back(0);
  auto [r, c] = hole;
  while (true) {
    const int above = r > 1 ? grid[r - 2][c - 1] : 0;
    const int left = c > 1 ? grid[r - 1][c - 2] : 0;
    if (above == 0 && left == 0) break;
    if (above >= left) {
      grid[r - 1][c - 1] = above;
      --r;
    } else {
      grid[r - 1][c - 1] = left;
      --c;
    }
  }
  grid[r - 1][c - 1] = 0;
  if (vacated != nullptr) *vacated = {r, c};
  Tableau out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j) out.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, grid[i][j]);
  return out;
}

Tableau rectify(const Tableau& t, bool lowestFirst) {
  Tableau cur = t;
  while (true) {
    const Partition mu = cur.inner();
    if (mu.empty()) return cur;
    int r = 0;
    if (lowestFirst) {
      r = static_cast<int>(mu.size());
    } else {
      for (std::size_t i = 0; i < mu.size(); ++i) {
        const int next = i + 1 < mu.size() ? mu[i + 1] : 0;
        if (mu[i] > next) {
          r = static_cast<int>(i) + 1;
          break;
        }
      }
    }
    cur = forwardSlide(cur, {r, mu[r - 1]});
  }
}

Tableau rotateComplement(const Tableau& t, int d) {
  const int rows = t.numRows();
  const int width = t.rowLength(1);
  const Partition lambda = t.shape();
  Partition mu = t.inner();
  mu.resize(rows, 0);
  Partition inner;
  std::vector<std::vector<int>> entries;
  for (int rr = 1; rr <= rows; ++rr) {
    const int r = rows + 1 - rr;
    inner.push_back(width - lambda[r - 1]);
    std::vector<int> row;
    for (int c = lambda[r - 1]; c > mu[r - 1]; --c) {
      const int v = t.at(r, c);
      if (v > d) throw InvalidInput("tableau entry exceeds the alphabet bound");
      row.push_back(d + 1 - v);
    }
    entries.push_back(std::move(row));
  }
  return Tableau::skew(inner, entries);
}

Tableau evacuation(const Tableau& t, int d) {
  if (!t.isStraight()) throw InvalidInput("evacuation of a skew tableau");
  return rectify(rotateComplement(t, d));
}

}  // namespace schubert
