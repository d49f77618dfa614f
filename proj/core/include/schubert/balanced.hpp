#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schubert/cell.hpp"
#include "schubert/diagram.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// A labeling of the cells of a diagram by positive integers.
using Labeling = std::map<Cell, int>;

// B(R): cell (p, q) of D(w) gets the row of the cross whose letter
// transposes q and w_p.
Labeling balancedLabelOf(const RcGraph& r);

// Balanced in every hook, column-strict, and labels in row i at most i.
bool isBalanced(const Labeling& labels, const Diagram& d);
bool isHookBalanced(const Labeling& labels, const Diagram& d);

// All balanced labelings of D(w), by backtracking over rows.
std::vector<Labeling> allBalancedLabelings(const Permutation& w);
Polynomial labelingMonomial(const Labeling& labels);

// t_1, ..., t_n: row k lists the labels of row k of B sorted decreasingly,
// or, for an rc-graph, the rows of the crosses line k traverses
// horizontally.
using RowContent = std::vector<Word>;
RowContent rowContent(const Labeling& labels, int n);
RowContent rowContentOfGraph(const RcGraph& r);
// Blocks T_i = t_{d_{i-1}+1} ... t_{d_i} over the descents d_i of w.
std::vector<RowContent> rowContentBlocks(const RowContent& t, const Permutation& w);
// Rows weakly decreasing, lengths weakly increasing, and each entry
// strictly below the entry above it in the next row.
bool isReverseSsytBlock(const RowContent& block);

// Routes the lines of w one after another, reading the horizontal crossings
// of line k from t_k.  Throws InvalidInput when the routing fails or does
// not produce an rc-graph of w.
RcGraph graphFromRowContent(const RowContent& t, const Permutation& w);

// For 321-avoiding w: B(R) on D(w) with empty rows and columns removed,
// mirrored left to right, is a skew SSYT; its rectification is Q~(R).
Tableau mirroredLabeling(const RcGraph& r);
Tableau revtabTableau(const RcGraph& r);
// Grassmannian w with descent d: evacuation over [d] of B(R) with entries
// k -> d + 1 - k, read with the rows of D(w) bottom to top.
Tableau revtabGrassmannian(const RcGraph& r);
// Q~(R) equals the tableau above; throws InvalidInput unless w(R) avoids 321.
bool revtabCheck(const RcGraph& r);

}  // namespace schubert
