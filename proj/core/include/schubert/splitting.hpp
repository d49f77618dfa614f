#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/stable_rc_graph.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// Cut points 0 < a_1 < ... < a_m; variable window i is x_{a_{i-1}+1} .. x_{a_i}.
using CutPoints = std::vector<int>;
using PartitionTuple = std::vector<Partition>;

// Whether the cuts are strictly increasing, positive, and contain every
// descent of w.
bool isCompatible(const Permutation& w, const CutPoints& a);
// Throws InvalidInput unless compatible with a_m < n.
void requireCompatible(const Permutation& w, const CutPoints& a);

// Crosses of R in rows a_{k-1}+1 .. a_k, one stable graph per band (with
// m = a_k).
std::vector<StableRcGraph> splitRcGraph(const RcGraph& r, const CutPoints& a);
// Stacks bands back into an rc-graph of S_n.
RcGraph stackBands(const std::vector<StableRcGraph>& bands, int n);

// c_lambda: number of tuples (T_1, ..., T_m) of SSYT with T_i of shape
// conjugate to lambda^i, entries of T_i greater than a_{i-1}, and
// col(T_1) ... col(T_m) a reduced word for w.
long long coefficientTableaux(const Permutation& w, const CutPoints& a, const PartitionTuple& lambda);
// Every nonzero c_lambda.
std::map<PartitionTuple, long long> splitCoefficients(const Permutation& w, const CutPoints& a);
// The coefficients of the nonvanishing Schur products, read off the exact
// Schubert polynomial by peeling lexicographically leading terms.  Throws InternalError if a leading term
// is not a product of partitions.
std::map<PartitionTuple, long long> splitCoefficientsByExtraction(const Permutation& w,
                                                                  const CutPoints& a);

// Whether some lambda^i has more parts than window i has variables, making
// the Schur product zero.
bool schurProductVanishes(const PartitionTuple& lambda, const CutPoints& a);
// s_{lambda^1}(X_1) ... s_{lambda^m}(X_m).
Polynomial schurProduct(const PartitionTuple& lambda, const CutPoints& a);
// Sum of c_lambda s_{lambda^1}(X_1) ... s_{lambda^m}(X_m).
Polynomial splitFormula(const Permutation& w, const CutPoints& a);

// Inverse of the band splitting: each band is rebuilt from (P_k, Q_k) by
// reverse EG insertion of (P_k, U(shape(Q_k), a_{k-1})) followed by the f~
// moves that turn U(shape(Q_k), a_{k-1}) into Q_k.  nullopt if some step
// leaves the rc-graphs or the stacked word is not reduced for w.
std::optional<RcGraph> assembleFromPairs(const Permutation& w, const CutPoints& a,
                                         const std::vector<TableauPair>& pairs);

}  // namespace schubert
