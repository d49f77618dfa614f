#include "schubert/keys.hpp"

#include <algorithm>
#include <optional>

#include "schubert/diagram.hpp"
#include "schubert/error.hpp"
#include "schubert/nilplactic.hpp"
#include "schubert/word_ops.hpp"

namespace schubert {

Tableau keyOfComposition(std::span<const int> alpha) {
  const Partition lambda = partitionOf(alpha);
  std::vector<std::vector<int>> cols;
  const int width = lambda.empty() ? 0 : lambda.front();
  for (int j = 1; j <= width; ++j) {
    std::vector<int> col;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] >= j) col.push_back(static_cast<int>(i) + 1);
    cols.push_back(std::move(col));
  }
  return fromColumns(cols);
}

bool isKey(const Tableau& t) {
  for (int c = 2; c <= t.rowLength(1); ++c) {
    const auto prev = t.column(c - 1);
    for (int v : t.column(c))
      if (!std::binary_search(prev.begin(), prev.end(), v)) return false;
  }
  return true;
}

namespace {

using Grid = std::vector<std::vector<int>>;

// Columns of a straight tableau, top to bottom.
std::vector<std::vector<int>> columnsOf(const Tableau& t) {
  std::vector<std::vector<int>> cols;
  for (int c = 1; c <= t.rowLength(1); ++c) cols.push_back(t.column(c));
  return cols;
}

// Removes the bottom entry of the last column and undoes the column
// insertion that produced it; returns the letter pushed out on the left.
int reverseColumnInsert(std::vector<std::vector<int>>& cols) {
  int y = cols.back().back();
  cols.back().pop_back();
  std::size_t k = cols.size() - 1;
  if (cols.back().empty()) cols.pop_back();
  while (k-- > 0) {
    auto& col = cols[k];
    // Largest entry <= y.
    auto it = std::upper_bound(col.begin(), col.end(), y);
    if (it == col.begin()) throw InternalError("reverse column insertion failed");
    --it;
    std::swap(*it, y);
  }
  return y;
}

// Removes the last entry of row r (0-based) and undoes the row insertion that
// produced it; returns the letter pushed out of the first row.
int reverseRowInsert(Grid& rows, std::size_t r) {
  int y = rows[r].back();
  rows[r].pop_back();
  for (std::size_t k = r; k-- > 0;) {
    auto& row = rows[k];
    // Largest entry < y.
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.begin()) throw InternalError("reverse row insertion failed");
    --it;
    std::swap(*it, y);
  }
  return y;
}

using PairOp = std::optional<ColumnPair> (*)(const Column&, const Column&);

Column asColumn(const std::vector<int>& topDown) { return Column(topDown.rbegin(), topDown.rend()); }
std::vector<int> topDown(const Column& c) { return std::vector<int>(c.rbegin(), c.rend()); }

// Swaps the lengths of two adjacent columns, the left one the longer, by
// repeated inverse slides.
ColumnPair exchange(Column a, Column b, PairOp inverse) {
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  if (la <= lb) {
    if (la == lb) return {a, b};
    throw InternalError("column exchange needs a longer left column");
  }
  for (std::size_t k = 0; k < la - lb; ++k) {
    auto p = inverse(a, b);
    if (!p) throw InternalError("column length exchange failed");
    a = p->first;
    b = p->second;
  }
  return {a, b};
}

Tableau leftKeyWith(const Tableau& t, PairOp inverse) {
  const auto cols = columnsOf(t);
  std::vector<std::vector<int>> key;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column moving = asColumn(cols[j]);
    for (std::size_t k = j; k-- > 0;) {
      moving = exchange(asColumn(cols[k]), moving, inverse).first;
    }
    key.push_back(topDown(moving));
  }
  return fromColumns(key);
}

Tableau rightKeyWith(const Tableau& t, PairOp inverse) {
  const auto cols = columnsOf(t);
  std::vector<std::vector<int>> key;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column moving = asColumn(cols[j]);
    for (std::size_t k = j + 1; k < cols.size(); ++k) {
      moving = exchange(moving, asColumn(cols[k]), inverse).second;
    }
    key.push_back(topDown(moving));
  }
  return fromColumns(key);
}

}  // namespace

Tableau leftKey(const Tableau& t) {
  if (!t.isStraight()) throw InvalidInput("keys need a straight tableau");
  const auto cols = columnsOf(t);
  std::vector<std::vector<int>> key;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::vector<int>> work(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    std::vector<int> out;
    for (std::size_t k = 0; k < cols[j].size(); ++k) out.push_back(reverseColumnInsert(work));
    std::sort(out.begin(), out.end());
    key.push_back(std::move(out));
  }
  return fromColumns(key);
}

Tableau rightKey(const Tableau& t) {
  if (!t.isStraight()) throw InvalidInput("keys need a straight tableau");
  const auto cols = columnsOf(t);
  std::vector<std::vector<int>> key;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Grid rows;
    for (int r = 1; r <= t.numRows(); ++r) {
      std::vector<int> row;
      for (int c = static_cast<int>(j) + 1; c <= t.rowLength(r); ++c) row.push_back(t.at(r, c));
      if (!row.empty()) rows.push_back(std::move(row));
    }
    std::vector<int> out;
    for (std::size_t r = cols[j].size(); r-- > 0;) out.push_back(reverseRowInsert(rows, r));
    std::sort(out.begin(), out.end());
    key.push_back(std::move(out));
  }
  return fromColumns(key);
}

Tableau leftKeyByJdt(const Tableau& t) { return leftKeyWith(t, &jdtInvColumns); }
Tableau rightKeyByJdt(const Tableau& t) { return rightKeyWith(t, &jdtInvColumns); }

Tableau leftNilKey(const Tableau& t) {
  requireReduced(t.columnWord(), "nil key column word");
  return leftKeyWith(t, &nilJdtInvColumns);
}

Tableau rightNilKey(const Tableau& t) {
  requireReduced(t.columnWord(), "nil key column word");
  return rightKeyWith(t, &nilJdtInvColumns);
}

std::vector<Tableau> tabSet(std::span<const int> alpha) {
  const Partition lambda = partitionOf(alpha);
  const Tableau key = keyOfComposition(alpha);
  std::vector<Tableau> out;
  forEachSsyt(lambda, 1, std::max(key.maxEntry(), 1), [&](const Tableau& t) {
    if (entrywiseLeq(rightKey(t), key)) out.push_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> piTableau(int r, const Tableau& t) {
  const Word w = t.columnWord();
  const RPairing p = rPairing(w, r);
  if (p.t() > 0) return {};
  std::vector<Tableau> out{t};
  Word cur = w;
  for (int k = 0; k < p.s(); ++k) {
    cur = *fWord(r, cur);
    out.push_back(t.withColumnWord(cur));
  }
  return out;
}

std::vector<Tableau> piTableaux(std::span<const int> word, std::vector<Tableau> start) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<Tableau> next;
    for (const Tableau& t : start) {
      auto image = piTableau(*it, t);
      next.insert(next.end(), image.begin(), image.end());
    }
    start = std::move(next);
  }
  return start;
}

std::vector<Tableau> demazureTableaux(std::span<const int> alpha) {
  const Word word = reducedWordOf(uOfAlpha(alpha));
  return demazureTableaux(alpha, word);
}

std::vector<Tableau> demazureTableaux(std::span<const int> alpha, std::span<const int> word) {
  return piTableaux(word, {superstandard(partitionOf(alpha))});
}

Polynomial keyPolynomial(std::span<const int> alpha) {
  Polynomial p;
  for (const Tableau& t : tabSet(alpha)) p += t.monomial();
  return p;
}

}  // namespace schubert
