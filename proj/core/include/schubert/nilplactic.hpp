#pragma once

#include <optional>
#include <span>
#include <vector>

#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/permutation.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// Edelman-Greene insertion of x into p; returns the new cell.  Inserting x
// into a row holding both x and x+1 leaves the row alone and carries x+1 on.
Cell egInsert(Tableau& p, int x);

// P~(v) and the standard recording tableau.  Throws NotReduced.
TableauPair edelmanGreene(std::span<const int> v);
Tableau egTableau(std::span<const int> v);

// Removes the entry at the corner `cell` of p, undoing the insertion that
// created it, and returns the letter that was inserted.
int egUninsert(Tableau& p, Cell cell);

// P~ by EG insertion of the bottom word and Q~ by conjugate placing of the
// top letters.  Throws unless the biword is reverse antilexicographic with a
// reduced bottom word.
TableauPair egConjugate(const Biword& w);

// Inverse of egConjugate: the biword whose pair is (p, q).  q must have the
// conjugate shape of p.
Biword egConjugateInverse(const Tableau& p, const Tableau& q);

// Coxeter-Knuth class of a reduced word by closure under
// ikj ~ kij, jik ~ jki (i < j < k) and i(i+1)i ~ (i+1)i(i+1).
std::vector<Word> coxeterKnuthClass(const Word& v);
// Equality of EG insertion tableaux.
bool ckEquivalent(std::span<const int> u, std::span<const int> v);

// Plactification: phi(empty) = empty, phi(r u) = r sigma_r(phi(u)).
Word plactify(std::span<const int> v);
// Inverse of the recursion on arbitrary words: psi(r z) = r psi(sigma_r(z)).
Word unplactify(std::span<const int> z);
// phi_u(v) = u_1 sigma_{u_1}(u_2 sigma_{u_2}( ... u_l sigma_{u_l}(v))).
Word phiU(std::span<const int> u, std::span<const int> v);

// Nilplactic jeu de taquin on two columns (strictly decreasing words, read
// bottom to top, whose concatenation is reduced): the unique column pair of
// lengths (s+1, t-1) (resp. (s-1, t+1)) Coxeter-Knuth equivalent to uv, or
// nullopt.
std::optional<ColumnPair> nilJdtColumns(const Column& u, const Column& v);
std::optional<ColumnPair> nilJdtInvColumns(const Column& u, const Column& v);

// The same by exhaustive search of the Coxeter-Knuth class.
std::optional<ColumnPair> nilColumnPairBySearch(const Column& u, const Column& v, int leftLength);

}  // namespace schubert
