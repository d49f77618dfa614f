#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/stable_rc_graph.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// The rc-graphs of w sharing one EG tableau P~.
struct Crystal {
  Tableau p;
  std::vector<RcGraph> members;  // sorted
  std::vector<Tableau> qSet;     // Q~ of each member, same order
  // content(K~_-(P^T)), trailing zeros trimmed.
  Composition alpha;

  Polynomial monomialSum() const;
};

// R(w) grouped by P~, ordered by P~.
std::vector<Crystal> crystalPartition(const Permutation& w);

// K~_-(P^T) and its content.
Tableau bottomKey(const Tableau& p);
Composition crystalWeight(const Tableau& p);

// K_+(Q~(R)) <= K~_-(P~(R)^T) entrywise.
bool keycondCheck(const StableRcGraph& r);

// R_top(P) and R_bot(P): the members with Q~ = U(shape(P^T)) and
// Q~ = K~_-(P^T), as rc-graphs in S_n (n defaults to the smallest that
// fits).  Throws InvalidInput when P is not an EG tableau.
std::pair<RcGraph, RcGraph> crystalExtremes(const Tableau& p, int n = 0);

// {R, f~_r R, ..., f~_r^t R} when every unpaired cross of rows r, r+1 is in
// row r (t of them), else empty.
std::vector<RcGraph> piTildeR(int r, const RcGraph& g);
// Multiset image of pi~_{a_1} ... pi~_{a_p} (last letter first).
std::vector<RcGraph> piTildeRs(std::span<const int> word, std::vector<RcGraph> start);
// pi~ along reducedWordOf(u(alpha)) applied to R_top(P).
std::vector<RcGraph> generateCrystal(const Tableau& p, int n = 0);

// R <= R' in the crystal order: Q~(R') <= Q~(R) entrywise.
bool crystalLeq(const RcGraph& a, const RcGraph& b);

struct KeyTerm {
  Tableau p;
  Composition alpha;
  Polynomial key;
};
std::vector<KeyTerm> schubertKeyDecomposition(const Permutation& w);

// Graphviz digraph of a crystal: nodes are members, edges f~_r labelled r.
std::string crystalDot(const Crystal& c);

}  // namespace schubert
