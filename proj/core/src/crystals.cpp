#include "schubert/crystals.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schubert/divided_difference.hpp"
#include "schubert/error.hpp"
#include "schubert/keys.hpp"
#include "schubert/nilplactic.hpp"

namespace schubert {

namespace {

Composition trimmed(Composition a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

TableauPair pairOf(const RcGraph& g) { return StableRcGraph::fromRcGraph(g).egPair(); }

RcGraph graphFrom(const Tableau& p, const Tableau& q, int n) {
  const Biword b = egConjugateInverse(p, q);
  const StableRcGraph s = StableRcGraph::fromBiword(b);
  if (!s.isRcGraph()) throw InternalError("extreme element is not an rc-graph");
  return s.toRcGraph(n);
}

}  // namespace

Polynomial Crystal::monomialSum() const {
  Polynomial out;
  for (const RcGraph& g : members) out += g.monomial();
  return out;
}

std::vector<Crystal> crystalPartition(const Permutation& w) {
  std::map<Tableau, std::vector<std::pair<RcGraph, Tableau>>> groups;
  for (const RcGraph& g : enumerateAll(w)) {
    TableauPair pq = pairOf(g);
    groups[pq.p].emplace_back(g, std::move(pq.q));
  }
  std::vector<Crystal> out;
  for (auto& [p, items] : groups) {
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Crystal c;
    c.p = p;
    for (auto& [g, q] : items) {
      c.members.push_back(g);
      c.qSet.push_back(q);
    }
    c.alpha = crystalWeight(p);
    out.push_back(std::move(c));
  }
  return out;
}

Tableau bottomKey(const Tableau& p) { return leftNilKey(p.transposed()); }

Composition crystalWeight(const Tableau& p) { return trimmed(bottomKey(p).content()); }

bool keycondCheck(const StableRcGraph& r) {
  const TableauPair pq = r.egPair();
  return entrywiseLeq(rightKey(pq.q), bottomKey(pq.p));
}

std::pair<RcGraph, RcGraph> crystalExtremes(const Tableau& p, int n) {
  if (!p.isStraight() || !p.isSemistandard() || !isReducedWord(p.rowWord()))
    throw InvalidInput("not an EG insertion tableau: " + p.toString());
  const Tableau pt = p.transposed();
  return {graphFrom(p, superstandard(pt.shape()), n), graphFrom(p, bottomKey(p), n)};
}

std::vector<RcGraph> piTildeR(int r, const RcGraph& g) {
  const StableRcGraph s = StableRcGraph::fromRcGraph(g);
  const DiagramPairing pairing = rPairing(s, r);
  if (!pairing.unpairedLower.empty()) return {};
  std::vector<RcGraph> out{g};
  StableRcGraph cur = s;
  for (std::size_t k = 0; k < pairing.unpairedUpper.size(); ++k) {
    auto next = fTilde(r, cur);
    if (!next) throw InvalidInput("f~_" + std::to_string(r) + " is undefined on this graph");
    if (!next->isRcGraph()) throw InternalError("pi~ left the rc-graphs");
    cur = *next;
    out.push_back(cur.toRcGraph(g.n()));
  }
  return out;
}

std::vector<RcGraph> piTildeRs(std::span<const int> word, std::vector<RcGraph> start) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<RcGraph> next;
    for (const RcGraph& g : start) {
      auto image = piTildeR(*it, g);
      next.insert(next.end(), image.begin(), image.end());
    }
    start = std::move(next);
  }
  return start;
}

std::vector<RcGraph> generateCrystal(const Tableau& p, int n) {
  const Word word = reducedWordOf(uOfAlpha(crystalWeight(p)));
  return piTildeRs(word, {crystalExtremes(p, n).first});
}

bool crystalLeq(const RcGraph& a, const RcGraph& b) {
  const TableauPair pa = pairOf(a);
  const TableauPair pb = pairOf(b);
  return pa.p == pb.p && entrywiseLeq(pb.q, pa.q);
}

std::vector<KeyTerm> schubertKeyDecomposition(const Permutation& w) {
  std::vector<KeyTerm> out;
  for (const Crystal& c : crystalPartition(w)) out.push_back({c.p, c.alpha, keyOracle(c.alpha)});
  return out;
}

std::string crystalDot(const Crystal& c) {
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::map<RcGraph, std::size_t> index;
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    index[c.members[i]] = i;
    std::string label = c.members[i].toString();
    std::string escaped;
    for (char ch : label) {
      if (ch == '\n')
        escaped += "\\l";
      else
        escaped += ch;
    }
    os << "  n" << i << " [label=\"" << escaped << "\\l\"];\n";
  }
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    for (int r = 1; r < c.members[i].n(); ++r) {
      auto next = fTilde(r, c.members[i]);
      if (!next) continue;
      auto it = index.find(*next);
      if (it != index.end()) os << "  n" << i << " -> n" << it->second << " [label=\"" << r << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace schubert
