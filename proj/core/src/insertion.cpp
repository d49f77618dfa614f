#include "schubert/insertion.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

Cell rowInsert(Tableau& p, int x) {
  int r = 1;
  while (true) {
    const int len = p.rowLength(r);
    int c = 1;
    while (c <= len && p.at(r, c) <= x) ++c;
    if (c > len) {
      p.set(r, c, x);
      return {r, c};
    }
    const int bumped = p.at(r, c);
    p.set(r, c, x);
    x = bumped;
    ++r;
  }
}

TableauPair schensted(std::span<const int> v) {
  TableauPair out;
  int k = 0;
  for (int x : v) {
    const Cell c = rowInsert(out.p, x);
    out.q.set(c.row, c.col, ++k);
  }
  return out;
}

Tableau insertionTableau(std::span<const int> v) { return schensted(v).p; }

bool isReverseAntilex(const Biword& w) {
  if (w.top.size() != w.bottom.size()) return false;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w.top[k] > w.top[k + 1]) return false;
    if (w.top[k] == w.top[k + 1] && w.bottom[k] <= w.bottom[k + 1]) return false;
  }
  return true;
}

bool isReverseLex(const Biword& w) {
  if (w.top.size() != w.bottom.size()) return false;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w.top[k] < w.top[k + 1]) return false;
    if (w.top[k] == w.top[k + 1] && w.bottom[k] <= w.bottom[k + 1]) return false;
  }
  return true;
}

Biword transposeBiword(const Biword& w) {
  std::vector<std::pair<int, int>> letters;
  for (std::size_t k = 0; k < w.size(); ++k) letters.emplace_back(w.bottom[k], w.top[k]);
  std::sort(letters.begin(), letters.end(), std::greater<>());
  Biword out;
  for (const auto& [a, b] : letters) {
    out.top.push_back(a);
    out.bottom.push_back(b);
  }
  return out;
}

TableauPair rskConjugate(const Biword& w) {
  if (!isReverseAntilex(w)) throw InvalidInput("biword is not in reverse antilexicographic order");
  TableauPair out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Cell c = rowInsert(out.p, w.bottom[k]);
    out.q.set(c.col, c.row, w.top[k]);
  }
  return out;
}

TableauPair rskConjugateTransposed(const Biword& w) {
  if (!isReverseLex(w)) throw InvalidInput("biword is not in reverse lexicographic order");
  TableauPair out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Cell c = rowInsert(out.p, w.bottom[k]);
    // Tops arrive in weakly decreasing order: open the conjugate cell, slide
    // the hole back to the corner and put the new letter there.
    out.q = reverseSlide(out.q, {c.col, c.row});
    out.q.set(1, 1, w.top[k]);
  }
  return out;
}

}  // namespace schubert
