#pragma once

#include <optional>
#include <set>
#include <vector>

#include "schubert/diagram.hpp"
#include "schubert/permutation.hpp"
#include "schubert/rc_graph.hpp"

namespace schubert {

// D(w) = {(i, w_j) : i < j, w_i > w_j}.
Diagram permDiagram(const Permutation& w);

// The rightmost cell of row `from`, in column `col`, moves up to row `to`.
struct KohnertMove {
  int from = 0;
  int to = 0;
  int col = 0;
  friend bool operator==(const KohnertMove&, const KohnertMove&) = default;
};

std::vector<KohnertMove> kMoves(const Diagram& d);
// The move of the rightmost cell of row i, if there is an empty cell above.
std::optional<KohnertMove> kMoveOfRow(const Diagram& d, int row);
Diagram applyKMove(const Diagram& d, const KohnertMove& m);
// Closure of {D(w)} under K-moves.
std::set<Diagram> kohnertClosure(const Permutation& w);

// Phi(w): the plactified rc-graphs of w.
std::set<Diagram> phiSet(const Permutation& w);

// min{i : w_i < w_{i+1}}; w must not be the longest element.
int firstAscent(const Permutation& w);

// Bergeron's operator: B' = B \ {(r, w_r)} and {B', f_r B', ..., f_r^t B'}
// when the t unpaired cells of rows r, r+1 are all in row r, else empty.
// r = firstAscent(w) and B is a diagram for w s_r.
std::vector<Diagram> bergeronPartialDiagram(const Diagram& b, const Permutation& w);
// The same on rc-graphs of w s_r, producing rc-graphs of w.
std::vector<RcGraph> partialTildeRc(const RcGraph& r, const Permutation& w);

// Phi(w) and R(w) generated by the operators above from the longest element
// of S_n, as multisets in generation order.
std::vector<Diagram> phiByRecursion(const Permutation& w);
std::vector<RcGraph> rcGraphsByRecursion(const Permutation& w);

// {(i, end(i, j))}, end(i, j) the top column of the line crossing (i, j)
// vertically.  Throws InvalidInput unless w(R) avoids 321.
Diagram endMap(const RcGraph& r);
// Whether some line of R traverses one cross vertically and another
// horizontally.
bool hasMixedLine(const RcGraph& r);

}  // namespace schubert
