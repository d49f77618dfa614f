#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "schubert/balanced.hpp"
#include "schubert/crystals.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/error.hpp"
#include "schubert/insertion.hpp"
#include "schubert/keys.hpp"
#include "schubert/kohnert.hpp"
#include "schubert/nilplactic.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/splitting.hpp"
#include "schubert/stable_rc_graph.hpp"
#include "schubert/word_ops.hpp"

namespace schubert::verify {

namespace {

// Counts checks and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }
  void merge(const Tally& o) {
    checks_ += o.checks_;
    if (o.failures_ > 0 && failures_ == 0) first_ = o.first_;
    failures_ += o.failures_;
  }
  // Runs f and records any exception as a failure.
  void guard(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, [&] { return what + ": " + e.what(); });
    }
  }
  long long checks() const { return checks_; }
  long long failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  long long checks_ = 0;
  long long failures_ = 0;
  std::string first_;
};

// Runs body(i, tally) for i in [0, count) on a small thread pool; tallies
// are merged in index order so the reported failure is deterministic.
void parallelFor(std::size_t count, int threads, Tally& out,
                 const std::function<void(std::size_t, Tally&)>& body) {
  std::vector<Tally> parts(count);
  std::atomic<std::size_t> nextIndex{0};
  auto worker = [&] {
    for (std::size_t i = nextIndex++; i < count; i = nextIndex++) {
      parts[i].guard("item " + std::to_string(i), [&] { body(i, parts[i]); });
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(workers, count); ++t) pool.emplace_back(worker);
  }
  for (const Tally& t : parts) out.merge(t);
}

std::vector<Permutation> permutationsUpTo(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (Permutation& w : allPermutations(k)) out.push_back(std::move(w));
  return out;
}

std::vector<Permutation> samplePermutations(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int k = 0; k < count; ++k) {
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(word.begin(), word.end(), rng);
    out.emplace_back(word);
  }
  return out;
}

std::string name(const Permutation& w) { return "w=" + w.toString(); }

template <typename Body>
Result runCriterion(const std::string& id, const std::string& title, Body body) {
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  tally.guard(id, [&] { body(tally); });
  Result r;
  r.id = id;
  r.title = title;
  r.checks = tally.checks();
  r.failures = tally.failures();
  r.firstFailure = tally.first();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---- 1 ----------------------------------------------------------------

Result oracleEquivalence(const Options& o) {
  return runCriterion("1", "rc-graph sum equals the divided-difference Schubert polynomial", [&](Tally& t) {
    auto perms = permutationsUpTo(o.n);
    auto extra = samplePermutations(o.n + 1, o.sample, o.seed);
    perms.insert(perms.end(), extra.begin(), extra.end());
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      local.check(schubertSum(w) == schubertOracle(w), [&] { return name(w); });
    });
  });
}

// ---- 2 ----------------------------------------------------------------

Result singleVisitEnumeration(const Options& o) {
  return runCriterion("2", "L-move tree visits every rc-graph once; standard construction replays", [&](Tally& t) {
    const auto perms = permutationsUpTo(o.n);
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      std::vector<RcGraph> visited = enumerateAll(w);
      std::vector<RcGraph> sorted = visited;
      std::sort(sorted.begin(), sorted.end());
      const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      local.check(distinct, [&] { return name(w) + " duplicate visit"; });
      local.check(sorted == ladderClosure(w), [&] { return name(w) + " differs from the L-move closure"; });
      local.check(sorted == chuteClosure(w), [&] { return name(w) + " differs from the chute closure"; });
      const RcGraph bottom = rBot(w);
      for (const RcGraph& g : visited) {
        local.check(replay(bottom, standardConstruction(g)) == g,
                    [&] { return name(w) + " replay fails for\n" + g.toString(); });
      }
    });
  });
}

// ---- 3 ----------------------------------------------------------------

Result workedExample(const Options&) {
  return runCriterion("3", "standard construction reproduces the worked move list", [&](Tally& t) {
    const RcGraph g = RcGraph::fromCrosses({{1, 1}, {1, 3}, {2, 3}, {3, 1}, {3, 3}}, 6);
    t.check(g.permutation() == Permutation::parse("215463"), [&] { return "graph is not for 215463"; });
    std::string moves;
    for (const MoveRecord& m : standardConstruction(g)) moves += (moves.empty() ? "" : " ") + toString(m);
    const std::string expected = "(4,1)->(2,2) (2,2)->(1,3) (3,2)->(2,3) (5,1)->(4,2) (4,2)->(3,3)";
    t.check(moves == expected, [&] { return "got " + moves; });
  });
}

// ---- 4 ----------------------------------------------------------------

// All compositions of length len with lambda(alpha) inside the staircase
// (len-1, ..., 1).
std::vector<Composition> compositionsInStaircase(int len) {
  std::vector<Composition> out;
  Composition a(static_cast<std::size_t>(len), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == a.size()) {
      Partition lambda = partitionOf(a);
      for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > len - 1 - static_cast<int>(i)) return;
      out.push_back(a);
      return;
    }
    for (int v = 0; v < len; ++v) {
      a[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

Result keyDecomposition(const Options& o) {
  return runCriterion("4", "Schubert polynomials split into key polynomials over crystals", [&](Tally& t) {
    const auto perms = permutationsUpTo(o.n);
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      Polynomial total;
      for (const Crystal& c : crystalPartition(w)) {
        const Polynomial key = keyOracle(c.alpha);
        total += key;
        local.check(c.monomialSum() == key, [&] { return name(w) + " crystal " + c.p.toString(); });
      }
      local.check(total == schubertOracle(w), [&] { return name(w) + " key sum"; });
    });
    const auto alphas = compositionsInStaircase(std::min(o.n, 5));
    parallelFor(alphas.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Composition& a = alphas[i];
      const auto tab = tabSet(a);
      auto dem = demazureTableaux(a);
      std::sort(dem.begin(), dem.end());
      const bool multiplicityFree = std::adjacent_find(dem.begin(), dem.end()) == dem.end();
      local.check(multiplicityFree && dem == tab, [&] { return "alpha=" + joinWord(a); });
      local.check(keyPolynomial(a) == keyOracle(a), [&] { return "key polynomial alpha=" + joinWord(a); });
    });
    const auto crystals = crystalPartition(Permutation::parse("21543"));
    t.check(crystals.size() == 3, [&] { return std::to_string(crystals.size()) + " crystals for 21543"; });
    const Composition alpha{1, 0, 2, 1};
    const bool found = std::any_of(crystals.begin(), crystals.end(), [&](const Crystal& c) { return c.alpha == alpha; });
    t.check(found, [] { return "no crystal of weight (1,0,2,1)"; });
    t.check(uOfAlpha(alpha) == Permutation::parse("3142"), [&] { return "u(alpha)=" + uOfAlpha(alpha).toString(); });
  });
}

// ---- 5 ----------------------------------------------------------------

// Stable rc-graphs with the given reduced word and every semicompatible
// sequence with entries in [1, m].
std::vector<StableRcGraph> stableGraphsOfWord(const Word& red, int m) {
  std::vector<StableRcGraph> out;
  Word top(red.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int low) {
    if (k == red.size()) {
      out.push_back(StableRcGraph::fromBiword({top, red}, m));
      return;
    }
    for (int v = low; v <= m; ++v) {
      top[k] = v;
      const bool strict = k + 1 < red.size() && red[k] < red[k + 1];
      rec(k + 1, strict ? v + 1 : v);
    }
  };
  rec(0, 1);
  return out;
}

void checkWordOperators(const Word& u, int maxLetter, Tally& t) {
  const TableauPair pq = schensted(u);
  for (int r = 1; r < maxLetter; ++r) {
    const auto check = [&](const std::optional<Word>& h, const std::optional<Tableau>& hp, const char* op) {
      t.check(h.has_value() == hp.has_value(), [&] { return std::string(op) + " definedness on " + joinWord(u); });
      if (!h || !hp) return;
      const TableauPair image = schensted(*h);
      t.check(image.p == *hp, [&] { return std::string(op) + " P on " + joinWord(u); });
      t.check(image.q == pq.q, [&] { return std::string(op) + " Q on " + joinWord(u); });
    };
    check(eWord(r, u), eTableau(r, pq.p), "e");
    check(fWord(r, u), fTableau(r, pq.p), "f");
    check(sigmaWord(r, u), sigmaTableau(r, pq.p), "sigma");
  }
}

void checkDiagramOperators(const Diagram& d, int rows, Tally& t) {
  const TableauPair pq = d.rsk();
  const Biword b = d.biword();
  for (int r = 1; r < rows; ++r) {
    const auto check = [&](const std::optional<Diagram>& h, const std::optional<Tableau>& hq, const char* op) {
      t.check(h.has_value() == hq.has_value(), [&] { return std::string(op) + " definedness on\n" + d.toString(); });
      if (!h || !hq) return;
      const TableauPair image = h->rsk();
      t.check(image.p == pq.p, [&] { return std::string(op) + " changes P on\n" + d.toString(); });
      t.check(image.q == *hq, [&] { return std::string(op) + " Q on\n" + d.toString(); });
    };
    const auto e = eDiagram(r, d);
    const auto f = fDiagram(r, d);
    check(e, eTableau(r, pq.q), "e");
    check(f, fTableau(r, pq.q), "f");
    check(sigmaDiagram(r, d), sigmaTableau(r, pq.q), "sigma");
    // Jeu de taquin description of the same operators.
    const auto ep = ePlus(r, b);
    const auto fp = fPlus(r, b);
    t.check(ep.has_value() == e.has_value() && (!ep || Diagram::fromBiword(*ep) == *e),
            [&] { return "e+ differs on\n" + d.toString(); });
    t.check(fp.has_value() == f.has_value() && (!fp || Diagram::fromBiword(*fp) == *f),
            [&] { return "f+ differs on\n" + d.toString(); });
    // e_r on the bottom word of the transposed biword.
    const Biword bt = transposeBiword(b);
    const auto em = eWord(r, bt.bottom);
    t.check(em.has_value() == ep.has_value() &&
                (!em || Biword{bt.top, *em} == transposeBiword(*ep)),
            [&] { return "e- of the transpose differs on\n" + d.toString(); });
  }
}

void checkStableOperators(const StableRcGraph& g, Tally& t) {
  const TableauPair pq = g.egPair();
  const Diagram phi = plactifyGraph(g);
  for (int r = 1; r < g.m(); ++r) {
    const auto check = [&](const std::optional<StableRcGraph>& h, const std::optional<StableRcGraph>& hPlus,
                           const std::optional<Diagram>& hPhi, const std::optional<Tableau>& hq, const char* op) {
      t.check(h == hPlus, [&] { return std::string(op) + "~ differs from its jdt form on " + g.toString(); });
      t.check(h.has_value() == hPhi.has_value() && (!h || plactifyGraph(*h) == *hPhi),
              [&] { return std::string(op) + "~ does not commute with phi on " + g.toString(); });
      t.check(h.has_value() == hq.has_value(), [&] { return std::string(op) + "~ definedness on " + g.toString(); });
      if (!h || !hq) return;
      const TableauPair image = h->egPair();
      t.check(image.p == pq.p, [&] { return std::string(op) + "~ changes P~ on " + g.toString(); });
      t.check(image.q == *hq, [&] { return std::string(op) + "~ Q~ on " + g.toString(); });
    };
    const auto e = eTilde(r, g);
    const auto f = fTilde(r, g);
    check(e, eTildePlus(r, g), eDiagram(r, phi), eTableau(r, pq.q), "e");
    check(f, fTildePlus(r, g), fDiagram(r, phi), fTableau(r, pq.q), "f");
    const StableRcGraph s = sigmaTilde(r, g);
    t.check(s.egPair().p == pq.p && s.egPair().q == sigmaTableau(r, pq.q) && plactifyGraph(s) == sigmaDiagram(r, phi),
            [&] { return "sigma~ on " + g.toString(); });
    if (e) t.check(fTilde(r, *e) == g, [&] { return "f~ does not undo e~ on " + g.toString(); });
    if (g.isRcGraph() && e) t.check(e->isRcGraph(), [&] { return "e~ leaves the rc-graphs on " + g.toString(); });
  }
}

void checkPlactification(const Word& u, Tally& t) {
  const Word z = plactify(u);
  const TableauPair eg = edelmanGreene(u);
  const TableauPair sch = schensted(z);
  t.check(sch.q == eg.q, [&] { return "Q(phi(u)) != Q~(u) for " + joinWord(u); });
  const Tableau phiP = eg.p.withRowWord(plactify(eg.p.rowWord()));
  t.check(phiP.isSemistandard() && phiP == sch.p, [&] { return "phi(P~(u)) != P(phi(u)) for " + joinWord(u); });
  const Tableau pt = eg.p.transposed();
  const Tableau phiCol = pt.withColumnWord(plactify(pt.columnWord()));
  t.check(phiCol.isSemistandard(), [&] { return "phi of a column word leaves the tableaux for " + joinWord(u); });
  t.check(leftKey(phiCol) == leftNilKey(pt), [&] { return "K_-(phi(P)) != K~_-(P) for " + joinWord(u); });
}

Result crystalGeneration(const Options& o) {
  const int n = std::min(o.n, 4);
  return runCriterion("5", "crystals regenerate from their tops; crystal operator identities", [&](Tally& t) {
    const auto perms = permutationsUpTo(n);
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      for (const Crystal& c : crystalPartition(w)) {
        auto generated = generateCrystal(c.p, w.size());
        std::sort(generated.begin(), generated.end());
        local.check(generated == c.members, [&] { return name(w) + " crystal " + c.p.toString(); });
        const auto [top, bottom] = crystalExtremes(c.p, w.size());
        for (const RcGraph& g : c.members) {
          local.check(crystalLeq(bottom, g) && crystalLeq(g, top), [&] { return name(w) + " order"; });
          local.check(keycondCheck(StableRcGraph::fromRcGraph(g)), [&] { return name(w) + " key condition"; });
        }
      }
      for (const Word& u : allReducedWords(w)) {
        checkWordOperators(u, n, local);
        checkWordOperators(plactify(u), n, local);
        checkPlactification(u, local);
        for (const StableRcGraph& g : stableGraphsOfWord(u, n)) {
          checkStableOperators(g, local);
          checkDiagramOperators(plactifyGraph(g), g.m(), local);
          checkDiagramOperators(Diagram::fromBiword(g.biword()), g.m(), local);
          local.check(keycondCheck(g) == g.isRcGraph(), [&] { return "key condition vs compatibility " + g.toString(); });
        }
      }
    });
  });
}

// ---- 6 ----------------------------------------------------------------

Result kohnert(const Options& o) {
  return runCriterion("6", "Kohnert diagrams give Schubert polynomials and equal Phi(w)", [&](Tally& t) {
    const auto perms = permutationsUpTo(o.n);
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      const auto closure = kohnertClosure(w);
      Polynomial total;
      for (const Diagram& d : closure) total += d.monomial();
      local.check(total == schubertOracle(w), [&] { return name(w) + " Kohnert sum"; });
      local.check(closure == phiSet(w), [&] { return name(w) + " K(w) != Phi(w)"; });
    });
    const auto bigger = allPermutations(o.n + 1);
    parallelFor(bigger.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = bigger[i];
      local.check(plactifyGraph(rBot(w)) == permDiagram(w), [&] { return name(w) + " phi(R_bot) != D(w)"; });
    });
    const Permutation w = Permutation::parse("215463");
    Diagram d = permDiagram(w);
    const std::vector<std::pair<int, int>> moves{{4, 2}, {2, 1}, {5, 4}, {4, 2}};
    bool legal = true;
    for (const auto& [from, to] : moves) {
      const auto m = kMoveOfRow(d, from);
      if (!m || m->to != to) {
        legal = false;
        break;
      }
      d = applyKMove(d, *m);
    }
    t.check(legal, [] { return "example move sequence is not legal"; });
    t.check(legal && phiSet(w).contains(d), [] { return "example moves leave Phi(215463)"; });
  });
}

// ---- 7 ----------------------------------------------------------------

std::string rowContentText(const RowContent& t) {
  std::string out;
  for (const Word& row : t) out += "(" + joinWord(row, "") + ")";
  return out;
}

Result balanced(const Options& o) {
  return runCriterion("7", "balanced labelings give Schubert polynomials and biject with rc-graphs", [&](Tally& t) {
    const auto perms = permutationsUpTo(o.n);
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      const auto labelings = allBalancedLabelings(w);
      Polynomial total;
      for (const Labeling& b : labelings) total += labelingMonomial(b);
      local.check(total == schubertOracle(w), [&] { return name(w) + " labeling sum"; });
      const Diagram d = permDiagram(w);
      std::set<Labeling> images;
      for (const RcGraph& g : enumerateAll(w)) {
        const Labeling b = balancedLabelOf(g);
        images.insert(b);
        local.check(isBalanced(b, d), [&] { return name(w) + " B(R) not balanced for\n" + g.toString(); });
        local.check(labelingMonomial(b) == g.monomial(), [&] { return name(w) + " monomial"; });
        const RowContent fromLabels = rowContent(b, w.size());
        local.check(fromLabels == rowContentOfGraph(g), [&] { return name(w) + " T(B) != T(R)"; });
        for (const RowContent& block : rowContentBlocks(fromLabels, w))
          local.check(isReverseSsytBlock(block), [&] { return name(w) + " block " + rowContentText(block); });
        local.check(graphFromRowContent(fromLabels, w) == g, [&] { return name(w) + " round trip for\n" + g.toString(); });
      }
      local.check(std::vector<Labeling>(images.begin(), images.end()) == labelings,
                  [&] { return name(w) + " B is not onto the balanced labelings"; });
    });
    const Permutation w = Permutation::parse("215463");
    const RcGraph first = rBot(w);
    const RcGraph second = RcGraph::fromCrosses({{1, 1}, {1, 3}, {2, 3}, {3, 1}, {3, 3}}, 6);
    t.check(rowContentText(rowContentOfGraph(first)) == "(1)()(33)(4)(5)()",
            [&] { return "first example " + rowContentText(rowContentOfGraph(first)); });
    t.check(rowContentText(rowContentOfGraph(second)) == "(1)()(32)(1)(3)()",
            [&] { return "second example " + rowContentText(rowContentOfGraph(second)); });
  });
}

// ---- 8 ----------------------------------------------------------------

Result splitting(const Options& o) {
  return runCriterion("8", "Schubert polynomials split along compatible cut sets", [&](Tally& t) {
    auto perms = permutationsUpTo(std::min(o.n, 5));
    if (o.n > 5) {
      const auto extra = samplePermutations(o.n, std::max(1, o.sample / 10), o.seed + 2);
      perms.insert(perms.end(), extra.begin(), extra.end());
    }
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      const int n = w.size();
      const Polynomial oracle = schubertOracle(w);
      for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        CutPoints a;
        for (int k = 1; k < n; ++k)
          if ((mask >> (k - 1)) & 1) a.push_back(k);
        if (!isCompatible(w, a)) continue;
        const auto label = [&] { return name(w) + " cuts " + joinWord(a); };
        auto counted = splitCoefficients(w, a);
        Polynomial assembled;
        for (const auto& [lambda, c] : counted) {
          local.check(c >= 0, label);
          assembled += schurProduct(lambda, a) * c;
        }
        local.check(assembled == oracle, label);
        std::erase_if(counted, [&](const auto& kv) { return schurProductVanishes(kv.first, a); });
        local.check(counted == splitCoefficientsByExtraction(w, a), [&] { return label() + " extraction"; });
        if (static_cast<int>(a.size()) == n - 1)
          local.check(assembled == schubertSum(w), [&] { return label() + " full cut set"; });
      }
    });
  });
}

// ---- 9 ----------------------------------------------------------------

Result patternClasses(const Options& o) {
  return runCriterion("9", "321-avoiding, Grassmannian and vexillary identities", [&](Tally& t) {
    const auto perms = permutationsUpTo(o.n);
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      const PatternFlags flags = classify(w);
      const auto graphs = enumerateAll(w);
      for (const RcGraph& g : graphs) {
        local.check(hasMixedLine(g) == !flags.is321Avoiding, [&] { return name(w) + " mixed line"; });
        if (!flags.is321Avoiding) continue;
        local.check(endMap(g) == plactifyGraph(g), [&] { return name(w) + " end map for\n" + g.toString(); });
        local.check(revtabCheck(g), [&] { return name(w) + " Q~ vs B(R) for\n" + g.toString(); });
      }
      const auto crystals = crystalPartition(w);
      local.check((crystals.size() == 1) == flags.isVexillary, [&] { return name(w) + " crystal count"; });
      if (!flags.isVexillary) return;
      const Composition code = w.code();
      const Partition lambda = partitionOf(code);
      const std::vector<int> flag = vexillaryFlag(w);
      Composition trimmed = code;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      local.check(crystals.front().alpha == trimmed, [&] { return name(w) + " weight is not the code"; });
      auto expected = allSsyt(lambda, 1, std::max(1, w.size()), &flag);
      auto qs = crystals.front().qSet;
      std::sort(expected.begin(), expected.end());
      std::sort(qs.begin(), qs.end());
      local.check(qs == expected, [&] { return name(w) + " Q~ set is not the flagged tableaux"; });
      local.check(schur(lambda, 1, std::max(1, w.size()), &flag) == schubertOracle(w),
                  [&] { return name(w) + " flagged Schur polynomial"; });
    });
  });
}

// ---- 10 ---------------------------------------------------------------

Polynomial randomPolynomial(std::mt19937_64& rng, int vars, int terms, int maxExp) {
  std::uniform_int_distribution<int> e(0, maxExp);
  std::uniform_int_distribution<int> c(-5, 5);
  Polynomial p;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> exps(static_cast<std::size_t>(vars));
    for (int& x : exps) x = e(rng);
    p.addTerm(Monomial(exps), c(rng));
  }
  return p;
}

void checkOperatorLaws(const Polynomial& p, int vars, Tally& t) {
  const auto d = [](int i, const Polynomial& q) { return dividedDifference(i, q); };
  for (int i = 1; i < vars; ++i) {
    t.check(d(i, d(i, p)).isZero(), [&] { return "d_i^2 != 0 on " + p.toString(); });
    if (i + 1 < vars)
      t.check(d(i, d(i + 1, d(i, p))) == d(i + 1, d(i, d(i + 1, p))),
              [&] { return "braid relation fails on " + p.toString(); });
    for (int j = i + 2; j < vars; ++j)
      t.check(d(i, d(j, p)) == d(j, d(i, p)), [&] { return "commutation fails on " + p.toString(); });
  }
}

Result algebra(const Options& o) {
  return runCriterion("10", "divided difference identities, chain independence, stability", [&](Tally& t) {
    const int small = std::min(o.n, 4);
    const auto perms = permutationsUpTo(small);
    parallelFor(perms.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = perms[i];
      const Polynomial s = schubertOracle(w);
      checkOperatorLaws(s, small + 1, local);
      local.check(s == schubertOracle(w, ChainChoice::LargestAscent), [&] { return name(w) + " chain"; });
      local.check(s == schubertOracle(w.embedded(w.size() + 1)), [&] { return name(w) + " stability"; });
      local.check(s.isHomogeneous() && s.degree() == w.length() && s.hasNonnegativeCoefficients(),
                  [&] { return name(w) + " degree or sign"; });
    });
    const int big = o.n + 1;
    const auto sample = samplePermutations(big, std::max(1, o.sample / 10), o.seed + 1);
    parallelFor(sample.size(), threadCount(o), t, [&](std::size_t i, Tally& local) {
      const Permutation& w = sample[i];
      const Polynomial s = schubertOracle(w);
      local.check(s == schubertOracle(w, ChainChoice::LargestAscent), [&] { return name(w) + " chain"; });
      local.check(s == schubertOracle(w.embedded(big + 1)), [&] { return name(w) + " stability"; });
      std::mt19937_64 rng(o.seed + 17 * i);
      checkOperatorLaws(randomPolynomial(rng, big, 6, 3), big, local);
    });
  });
}

}  // namespace

int threadCount(const Options& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("SCHUBERT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"1", "core rcgraph", "rc-graph sum equals the divided-difference Schubert polynomial", oracleEquivalence},
      {"2", "rcgraph", "L-move tree visits every rc-graph once; standard construction replays", singleVisitEnumeration},
      {"3", "rcgraph", "standard construction reproduces the worked move list", workedExample},
      {"4", "keys", "Schubert polynomials split into key polynomials over crystals", keyDecomposition},
      {"5", "crystals plactic nilplactic", "crystals regenerate from their tops; crystal operator identities",
       crystalGeneration},
      {"6", "kohnert", "Kohnert diagrams give Schubert polynomials and equal Phi(w)", kohnert},
      {"7", "balanced", "balanced labelings give Schubert polynomials and biject with rc-graphs", balanced},
      {"8", "splitting", "Schubert polynomials split along compatible cut sets", splitting},
      {"9", "patterns kohnert balanced", "321-avoiding, Grassmannian and vexillary identities", patternClasses},
      {"10", "core", "divided difference identities, chain independence, stability", algebra},
  };
  return all;
}

std::vector<std::string> suiteNames() {
  return {"all", "core", "rcgraph", "keys", "crystals", "plactic", "nilplactic", "kohnert", "balanced", "splitting",
          "patterns"};
}

std::vector<Criterion> selectCriteria(const std::string& suite) {
  std::vector<Criterion> out;
  for (const Criterion& c : criteria()) {
    std::istringstream tags(c.suite);
    std::string tag;
    bool match = suite == "all";
    while (!match && tags >> tag) match = tag == suite;
    if (match) out.push_back(c);
  }
  return out;
}

std::string formatResult(const Result& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": checks=" << r.checks
     << " failures=" << r.failures << " time=" << std::fixed << std::setprecision(2) << r.seconds << "s";
  if (!r.passed()) os << "\n  first failure: " << r.firstFailure;
  return os.str();
}

}  // namespace schubert::verify
