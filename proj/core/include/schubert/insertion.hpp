#pragma once

#include <span>

#include "schubert/cell.hpp"
#include "schubert/permutation.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

struct TableauPair {
  Tableau p;
  Tableau q;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

// Schensted row insertion of x into p; returns the new cell.
Cell rowInsert(Tableau& p, int x);

// P(v) and the standard recording tableau Q(v).
TableauPair schensted(std::span<const int> v);
Tableau insertionTableau(std::span<const int> v);

// A two-rowed array of biletters (top[k], bottom[k]).
struct Biword {
  Word top;
  Word bottom;

  std::size_t size() const { return top.size(); }
  friend bool operator==(const Biword&, const Biword&) = default;
};

// True if the reverse of w is in antilexicographic order: tops weakly
// increase, and strictly decrease bottoms within equal tops.
bool isReverseAntilex(const Biword& w);
// True if the reverse of w is in lexicographic order: tops weakly decrease,
// and bottoms strictly decrease within equal tops.
bool isReverseLex(const Biword& w);

// w': swap the rows of w and reorder so that the reverse is lexicographic.
Biword transposeBiword(const Biword& w);

// RSK variant for 0/1 matrices: P by Schensted insertion of the bottom
// word, Q by conjugate placing of the top letters.  shape(Q) is the
// conjugate of shape(P).  Throws InvalidInput unless isReverseAntilex(w).
TableauPair rskConjugate(const Biword& w);

// The same pair for a transposed biword (reverse lexicographic): P by
// Schensted insertion of the bottom word, Q by conjugate sliding of the
// top letters.  Throws InvalidInput unless isReverseLex(w).
TableauPair rskConjugateTransposed(const Biword& w);

}  // namespace schubert
