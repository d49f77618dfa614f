#pragma once

#include <span>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// (p - s_i p) / (x_i - x_{i+1}).  Throws InternalError if the division is
// not exact, which cannot happen for a correct numerator.
Polynomial dividedDifference(int i, const Polynomial& p);

// Demazure operator p -> d_i(x_i p).
Polynomial isobaricPi(int i, const Polynomial& p);

// d_{a_1} d_{a_2} ... d_{a_k} p (the last letter acts first).
Polynomial applyDividedDifferences(std::span<const int> word, const Polynomial& p);
Polynomial applyIsobaricPis(std::span<const int> word, const Polynomial& p);

enum class ChainChoice { SmallestAscent, LargestAscent };

// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
Polynomial staircaseMonomial(int n);

// Schubert polynomial by descending from the longest element of S_n along
// the chain that always climbs by the smallest (or largest) ascent.
Polynomial schubertOracle(const Permutation& w,
                          ChainChoice chain = ChainChoice::SmallestAscent);

// x^alpha.
Polynomial monomialOf(std::span<const int> alpha);

// pi_{u(alpha)} applied to x^{lambda(alpha)}.
Polynomial keyOracle(std::span<const int> alpha);

}  // namespace schubert
