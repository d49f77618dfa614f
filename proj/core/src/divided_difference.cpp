#include "schubert/divided_difference.hpp"

#include "schubert/error.hpp"

namespace schubert {

Polynomial dividedDifference(int i, const Polynomial& p) {
  if (i < 1) throw InvalidInput("divided difference index must be positive");
  Polynomial rest = p - p.swapped(i);
  Polynomial quotient;
  // Synthetic division by x_i - x_{i+1}, eliminating the highest power of
  // x_i each round.
  while (!rest.isZero()) {
    const Monomial* lead = nullptr;
    Polynomial::Coefficient c = 0;
    for (const auto& [m, coeff] : rest.terms()) {
      if (lead == nullptr || m.exponent(i) > lead->exponent(i)) {
        lead = &m;
        c = coeff;
      }
    }
    const int e = lead->exponent(i);
    if (e == 0) throw InternalError("divided difference left a nonzero remainder");
    const Monomial q = lead->withExponent(i, e - 1);
    quotient.addTerm(q, c);
    Polynomial step(q, c);
    rest -= step.timesVariable(i);
    rest += step.timesVariable(i + 1);
  }
  return quotient;
}

Polynomial isobaricPi(int i, const Polynomial& p) {
  return dividedDifference(i, p.timesVariable(i));
}

Polynomial applyDividedDifferences(std::span<const int> word, const Polynomial& p) {
  Polynomial r = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = dividedDifference(*it, r);
  return r;
}

Polynomial applyIsobaricPis(std::span<const int> word, const Polynomial& p) {
  Polynomial r = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = isobaricPi(*it, r);
  return r;
}

Polynomial staircaseMonomial(int n) {
  std::vector<int> e;
  for (int i = 1; i < n; ++i) e.push_back(n - i);
  return Polynomial(Monomial(std::move(e)));
}

Polynomial schubertOracle(const Permutation& w, ChainChoice chain) {
  const int n = w.size();
  Word steps;
  Permutation u = w;
  while (true) {
    int pick = 0;
    for (int i = 1; i < n; ++i) {
      if (u(i) < u(i + 1)) {
        pick = i;
        if (chain == ChainChoice::SmallestAscent) break;
      }
    }
    if (pick == 0) break;
    steps.push_back(pick);
    u = u.timesSimple(pick);
  }
  return applyDividedDifferences(steps, staircaseMonomial(n));
}

Polynomial monomialOf(std::span<const int> alpha) {
  return Polynomial(Monomial(std::vector<int>(alpha.begin(), alpha.end())));
}

Polynomial keyOracle(std::span<const int> alpha) {
  const Partition lambda = partitionOf(alpha);
  return applyIsobaricPis(reducedWordOf(uOfAlpha(alpha)), monomialOf(lambda));
}

}  // namespace schubert
