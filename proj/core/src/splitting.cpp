#include "schubert/splitting.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "schubert/divided_difference.hpp"
#include "schubert/error.hpp"
#include "schubert/nilplactic.hpp"
#include "schubert/word_ops.hpp"

namespace schubert {

bool isCompatible(const Permutation& w, const CutPoints& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) return false;
    if (i > 0 && a[i] <= a[i - 1]) return false;
  }
  for (int d : w.descents())
    if (!std::binary_search(a.begin(), a.end(), d)) return false;
  return true;
}

void requireCompatible(const Permutation& w, const CutPoints& a) {
  if (!isCompatible(w, a)) throw InvalidInput("cut points are not compatible with " + w.toString());
  if (!a.empty() && a.back() >= w.size()) throw InvalidInput("last cut point must be below n");
}

std::vector<StableRcGraph> splitRcGraph(const RcGraph& r, const CutPoints& a) {
  requireCompatible(r.permutation().embedded(r.n()), a);
  std::vector<StableRcGraph> out;
  int lo = 0;
  for (int hi : a) {
    std::vector<Cell> band;
    for (const Cell& c : r.crosses())
      if (c.row > lo && c.row <= hi) band.push_back(c);
    out.push_back(StableRcGraph::fromCells(std::move(band), hi));
    lo = hi;
  }
  return out;
}

RcGraph stackBands(const std::vector<StableRcGraph>& bands, int n) {
  std::vector<Cell> cells;
  for (const StableRcGraph& b : bands)
    for (const Cell& c : b.cells()) cells.push_back(c);
  return RcGraph::fromCrosses(std::move(cells), n);
}

namespace {

// Partitions of k with at most `maxParts` parts, each part at most `maxPart`.
void forEachPartition(int k, int maxPart, int maxParts, Partition& cur,
                      const std::function<void(const Partition&)>& visit) {
  if (k == 0) {
    visit(cur);
    return;
  }
  if (maxParts == 0) return;
  for (int p = std::min(k, maxPart); p >= 1; --p) {
    cur.push_back(p);
    forEachPartition(k - p, p, maxParts - 1, cur, visit);
    cur.pop_back();
  }
}

// Walks tuples of tableaux whose concatenated column words stay a prefix of
// a reduced word for w, calling visit on each complete tuple.
class TupleWalker {
 public:
  TupleWalker(const Permutation& w, const CutPoints& a) : w_(w), a_(a), n_(w.size()) {}

  void run(const std::function<void(const std::vector<Tableau>&)>& visit,
           const PartitionTuple* fixedConjugates) {
    visit_ = &visit;
    fixed_ = fixedConjugates;
    Word prefix;
    std::vector<Tableau> tuple;
    band(0, prefix, tuple);
  }

 private:
  // Each letter must be a left descent of what remains of w.
  bool prefixOk(const Word& word) const {
    std::vector<int> rest(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) rest[static_cast<std::size_t>(i - 1)] = w_(i);
    for (int letter : word) {
      auto hiPos = std::find(rest.begin(), rest.end(), letter + 1);
      auto loPos = std::find(rest.begin(), rest.end(), letter);
      if (hiPos == rest.end() || loPos == rest.end() || loPos < hiPos) return false;
      std::iter_swap(hiPos, loPos);
    }
    return true;
  }

  void band(std::size_t k, Word& prefix, std::vector<Tableau>& tuple) {
    const int remaining = w_.length() - static_cast<int>(prefix.size());
    if (k == a_.size()) {
      if (remaining == 0) (*visit_)(tuple);
      return;
    }
    const int lo = (k == 0 ? 0 : a_[k - 1]) + 1;
    const int hi = n_ - 1;
    auto withShape = [&](const Partition& shape) {
      forEachSsyt(shape, lo, std::max(lo, hi), [&](const Tableau& t) {
        Word next = prefix;
        const Word col = t.columnWord();
        next.insert(next.end(), col.begin(), col.end());
        if (!prefixOk(next)) return;
        tuple.push_back(t);
        band(k + 1, next, tuple);
        tuple.pop_back();
      });
    };
    if (fixed_) {
      const Partition shape = conjugate((*fixed_)[k]);
      int size = 0;
      for (int p : shape) size += p;
      if (size > remaining) return;
      if (!shape.empty() && (lo > hi || static_cast<int>(shape.size()) > hi - lo + 1)) return;
      withShape(shape);
      return;
    }
    for (int size = 0; size <= remaining; ++size) {
      Partition cur;
      forEachPartition(size, size, std::max(0, hi - lo + 1), cur, withShape);
    }
  }

  Permutation w_;
  CutPoints a_;
  int n_;
  const std::function<void(const std::vector<Tableau>&)>* visit_ = nullptr;
  const PartitionTuple* fixed_ = nullptr;
};

PartitionTuple conjugateShapes(const std::vector<Tableau>& tuple) {
  PartitionTuple out;
  for (const Tableau& t : tuple) out.push_back(conjugate(t.shape()));
  return out;
}

}  // namespace

long long coefficientTableaux(const Permutation& w, const CutPoints& a, const PartitionTuple& lambda) {
  requireCompatible(w, a);
  if (lambda.size() != a.size()) throw InvalidInput("need one partition per cut point");
  long long count = 0;
  TupleWalker(w, a).run([&](const std::vector<Tableau>&) { ++count; }, &lambda);
  return count;
}

std::map<PartitionTuple, long long> splitCoefficients(const Permutation& w, const CutPoints& a) {
  requireCompatible(w, a);
  std::map<PartitionTuple, long long> out;
  TupleWalker(w, a).run([&](const std::vector<Tableau>& tuple) { ++out[conjugateShapes(tuple)]; },
                        nullptr);
  return out;
}

bool schurProductVanishes(const PartitionTuple& lambda, const CutPoints& a) {
  int lo = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (static_cast<int>(lambda[i].size()) > a[i] - lo) return true;
    lo = a[i];
  }
  return false;
}

Polynomial schurProduct(const PartitionTuple& lambda, const CutPoints& a) {
  Polynomial out(1);
  int lo = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    out = out * schur(lambda[i], lo + 1, a[i]);
    lo = a[i];
  }
  return out;
}

std::map<PartitionTuple, long long> splitCoefficientsByExtraction(const Permutation& w,
                                                                  const CutPoints& a) {
  requireCompatible(w, a);
  Polynomial rest = schubertOracle(w);
  std::map<PartitionTuple, long long> out;
  while (!rest.isZero()) {
    // Homogeneous, so the graded order's first term is lexicographically
    // largest, and it is the leading term of exactly one Schur product.
    const auto& [mono, coeff] = *rest.terms().begin();
    PartitionTuple lambda;
    int lo = 0;
    for (int hi : a) {
      Partition part;
      for (int i = lo + 1; i <= hi; ++i) part.push_back(mono.exponent(i));
      if (!std::is_sorted(part.rbegin(), part.rend()))
        throw InternalError("leading term is not a product of Schur leading terms");
      while (!part.empty() && part.back() == 0) part.pop_back();
      lambda.push_back(std::move(part));
      lo = hi;
    }
    if (mono.numVariables() > lo) throw InternalError("term uses variables beyond the last cut");
    if (coeff < 0) throw InternalError("negative split coefficient");
    out[lambda] = coeff;
    rest -= schurProduct(lambda, a) * coeff;
  }
  return out;
}

Polynomial splitFormula(const Permutation& w, const CutPoints& a) {
  Polynomial out;
  for (const auto& [lambda, c] : splitCoefficients(w, a)) out += schurProduct(lambda, a) * c;
  return out;
}

std::optional<RcGraph> assembleFromPairs(const Permutation& w, const CutPoints& a,
                                         const std::vector<TableauPair>& pairs) {
  requireCompatible(w, a);
  if (pairs.size() != a.size()) throw InvalidInput("need one tableau pair per cut point");
  std::vector<Cell> cells;
  int lo = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const int hi = a[k];
    const Tableau& q = pairs[k].q;
    // Raise q to U(shape, lo), remembering the letters used.
    Tableau cur = q;
    Word raises;
    for (bool moved = true; moved;) {
      moved = false;
      for (int r = lo + 1; r < hi; ++r) {
        if (auto up = eTableau(r, cur)) {
          cur = *up;
          raises.push_back(r);
          moved = true;
          break;
        }
      }
    }
    Tableau top = superstandard(q.shape());
    for (int r = 1; r <= top.numRows(); ++r)
      for (int c = 1; c <= top.rowLength(r); ++c) top.set(r, c, top.at(r, c) + lo);
    if (!(cur == top)) return std::nullopt;
    StableRcGraph g = StableRcGraph::fromBiword(egConjugateInverse(pairs[k].p, top), hi);
    if (!g.isRcGraph()) return std::nullopt;
    for (auto it = raises.rbegin(); it != raises.rend(); ++it) {
      auto next = fTilde(*it, g);
      if (!next || !next->isRcGraph()) return std::nullopt;
      g = *next;
    }
    for (const Cell& c : g.cells()) cells.push_back(c);
    lo = hi;
  }
  Word word;
  std::sort(cells.begin(), cells.end(), readingLess);
  for (const Cell& c : cells) word.push_back(c.row + c.col - 1);
  if (!isReducedWord(word) || permutationOfWord(word).embedded(w.size()) != w) return std::nullopt;
  return RcGraph::fromCrosses(std::move(cells), w.size());
}

}  // namespace schubert
