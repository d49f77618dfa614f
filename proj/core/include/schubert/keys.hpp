#pragma once

#include <span>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// key(alpha): shape lambda(alpha), letter i in the first alpha_i columns.
Tableau keyOfComposition(std::span<const int> alpha);
// Whether every column's entries lie in the previous column.
bool isKey(const Tableau& t);

// Left and right keys.  The primary constructions undo insertions: column j
// of K_-(T) comes out of reverse column insertion of column j of
// T restricted to columns 1..j, and column j of K_+(T) out of reverse row
// insertion of the first column of T restricted to columns j..p.
Tableau leftKey(const Tableau& t);
Tableau rightKey(const Tableau& t);

// The same keys by exchanging column lengths with jeu de taquin on pairs of
// adjacent columns.
Tableau leftKeyByJdt(const Tableau& t);
Tableau rightKeyByJdt(const Tableau& t);

// Nil keys: the column exchanges use nilplactic jeu de taquin.  The column
// word of t must be reduced.
Tableau leftNilKey(const Tableau& t);
Tableau rightNilKey(const Tableau& t);

// Tab(alpha) = { T of shape lambda(alpha) : K_+(T) <= key(alpha) }, sorted.
std::vector<Tableau> tabSet(std::span<const int> alpha);

// Set-valued Demazure operator on tableaux: {T, f_r T, ..., f_r^s T} when
// the unpaired r, r+1 of the column word are all r (s of them), else empty.
std::vector<Tableau> piTableau(int r, const Tableau& t);
// Multiset image of pi_{a_1} ... pi_{a_p} (last letter first).
std::vector<Tableau> piTableaux(std::span<const int> word, std::vector<Tableau> start);

// pi along the given reduced word of u(alpha) applied to U(lambda(alpha));
// uses reducedWordOf(u(alpha)) when no word is given.
std::vector<Tableau> demazureTableaux(std::span<const int> alpha);
std::vector<Tableau> demazureTableaux(std::span<const int> alpha, std::span<const int> word);

// Sum of x^T over Tab(alpha).
Polynomial keyPolynomial(std::span<const int> alpha);

}  // namespace schubert
