#include "schubert/rc_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

std::string toString(const MoveRecord& m) {
  return toString(m.from) + "->" + toString(m.to);
}

RcGraph RcGraph::fromCrosses(std::vector<Cell> cells, int n) {
  if (n < 1) throw InvalidInput("ambient size must be positive");
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1 || c.row + c.col > n) {
      throw InvalidInput("cross " + schubert::toString(c) + " outside the staircase of S_" +
                         std::to_string(n));
    }
  }
  std::sort(cells.begin(), cells.end(), ReadingOrder{});
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw InvalidInput("repeated cross");
  }
  Word word;
  word.reserve(cells.size());
  for (const Cell& c : cells) word.push_back(c.row + c.col - 1);
  requireReduced(word, "rc-graph reading word");
  Permutation w = Permutation::fromWord(word, n);
  return RcGraph(std::move(cells), n, std::move(w));
}

bool RcGraph::contains(Cell c) const {
  return std::binary_search(crosses_.begin(), crosses_.end(), c, ReadingOrder{});
}

Word RcGraph::red() const {
  Word a;
  a.reserve(crosses_.size());
  for (const Cell& c : crosses_) a.push_back(c.row + c.col - 1);
  return a;
}

Word RcGraph::comp() const {
  Word a;
  a.reserve(crosses_.size());
  for (const Cell& c : crosses_) a.push_back(c.row);
  return a;
}

Polynomial RcGraph::monomial() const {
  std::vector<int> rows = comp();
  return Polynomial::fromRowMultiset(rows);
}

std::vector<int> RcGraph::rowCounts() const {
  std::vector<int> counts(std::max(n_ - 1, 0), 0);
  for (const Cell& c : crosses_) ++counts[c.row - 1];
  return counts;
}

std::optional<MoveRecord> RcGraph::ladderMoveOf(Cell c) const {
  if (!contains(c)) return std::nullopt;
  // Only the rightmost cross of a row may move.
  auto it = std::lower_bound(crosses_.begin(), crosses_.end(), Cell{c.row, n_ + 1},
                             ReadingOrder{});
  if (it == crosses_.end() || *it != c) return std::nullopt;
  const CellSet set = cellSet();
  if (auto t = ladderTarget(set, c)) return MoveRecord{c, *t, MoveKind::Ladder};
  return std::nullopt;
}

std::vector<MoveRecord> RcGraph::ladderMoves() const {
  std::vector<MoveRecord> moves;
  const CellSet set = cellSet();
  for (std::size_t k = 0; k < crosses_.size(); ++k) {
    if (k > 0 && crosses_[k - 1].row == crosses_[k].row) continue;
    if (auto t = ladderTarget(set, crosses_[k])) {
      moves.push_back({crosses_[k], *t, MoveKind::Ladder});
    }
  }
  std::sort(moves.begin(), moves.end(),
            [](const MoveRecord& a, const MoveRecord& b) { return readingLess(a.to, b.to); });
  return moves;
}

std::vector<MoveRecord> RcGraph::chuteMoves() const {
  std::vector<MoveRecord> moves;
  const CellSet set = cellSet();
  for (const Cell& c : crosses_) {
    bool lowest = true;
    for (int r = c.row + 1; r + c.col <= n_; ++r) {
      if (set.contains({r, c.col})) {
        lowest = false;
        break;
      }
    }
    if (!lowest) continue;
    if (auto t = chuteTarget(set, c)) moves.push_back({c, *t, MoveKind::Chute});
  }
  std::sort(moves.begin(), moves.end(),
            [](const MoveRecord& a, const MoveRecord& b) { return readingLess(a.to, b.to); });
  return moves;
}

RcGraph RcGraph::applied(const MoveRecord& m) const {
  std::vector<Cell> cells = crosses_;
  auto it = std::find(cells.begin(), cells.end(), m.from);
  if (it == cells.end()) throw InvalidInput("move source " + schubert::toString(m.from) + " is not a cross");
  cells.erase(it);
  if (m.to.row < 1 || m.to.col < 1 || m.to.row + m.to.col > n_ ||
      std::find(cells.begin(), cells.end(), m.to) != cells.end()) {
    throw InvalidInput("move target " + schubert::toString(m.to) + " is not free");
  }
  cells.insert(std::upper_bound(cells.begin(), cells.end(), m.to, ReadingOrder{}), m.to);
  return RcGraph(std::move(cells), n_, perm_);
}

std::string RcGraph::toString() const {
  std::ostringstream os;
  for (int i = 1; i < n_; ++i) {
    for (int j = 1; i + j <= n_; ++j) os << (contains({i, j}) ? '+' : '.');
    os << '\n';
  }
  return os.str();
}

bool operator<(const RcGraph& a, const RcGraph& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.crosses_.begin(), a.crosses_.end(), b.crosses_.begin(),
                                      b.crosses_.end(), ReadingOrder{});
}

RcGraph rBot(const Permutation& w) {
  const Composition c = w.code();
  std::vector<Cell> cells;
  for (int i = 1; i <= static_cast<int>(c.size()); ++i)
    for (int j = 1; j <= c[i - 1]; ++j) cells.push_back({i, j});
  return RcGraph::fromCrosses(std::move(cells), w.size());
}

RcGraph rTop(const Permutation& w) {
  const Composition c = w.inverse().code();
  std::vector<Cell> cells;
  for (int j = 1; j <= static_cast<int>(c.size()); ++j)
    for (int i = 1; i <= c[j - 1]; ++i) cells.push_back({i, j});
  return RcGraph::fromCrosses(std::move(cells), w.size());
}

std::vector<MoveRecord> standardConstruction(const RcGraph& r) {
  const int n = r.n();
  RcGraph current = rBot(r.permutation());
  std::vector<MoveRecord> moves;
  for (int i = 1; i < n; ++i) {
    for (int j = n - i; j >= 1; --j) {
      const Cell target{i, j};
      if (!r.contains(target) || current.contains(target)) continue;
      const auto meet = traceLines(current.cellSet(), n);
      const LineMeeting at = meet[i - 1][j - 1];
      // The two lines avoiding each other here cross exactly once elsewhere.
      std::optional<Cell> source;
      for (const Cell& c : current.crosses()) {
        const LineMeeting m = meet[c.row - 1][c.col - 1];
        if ((m.fromLeft == at.fromLeft && m.fromBelow == at.fromBelow) ||
            (m.fromLeft == at.fromBelow && m.fromBelow == at.fromLeft)) {
          source = c;
          break;
        }
      }
      if (!source) throw InternalError("no crossing for the lines meeting at " + toString(target));
      Cell pos = *source;
      while (pos != target) {
        const auto move = current.ladderMoveOf(pos);
        if (!move || move->to.row < target.row) {
          throw InternalError("standard construction cannot move " + toString(pos) +
                              " towards " + toString(target));
        }
        moves.push_back(*move);
        current = current.applied(*move);
        pos = move->to;
      }
    }
  }
  if (!(current == r)) throw InternalError("standard construction did not reach the target");
  return moves;
}

RcGraph replay(RcGraph start, const std::vector<MoveRecord>& moves) {
  for (const MoveRecord& m : moves) start = start.applied(m);
  return start;
}

RcGraphEnumerator::RcGraphEnumerator(const Permutation& w) {
  stack_.push_back({rBot(w), std::nullopt, std::nullopt});
}

std::optional<RcGraph> RcGraphEnumerator::next() {
  if (stack_.empty()) return std::nullopt;
  Node node = std::move(stack_.back());
  stack_.pop_back();
  std::vector<Node> children;
  for (const MoveRecord& m : node.graph.ladderMoves()) {
    const Cell p = m.from;
    const Cell q = m.to;
    if (node.current && p == *node.current) {
      if (!node.last || readingLess(*node.last, q)) {
        children.push_back({node.graph.applied(m), node.last, q});
      }
    } else if (node.current) {
      if (readingLess(*node.current, q)) {
        children.push_back({node.graph.applied(m), node.current, q});
      }
    } else {
      children.push_back({node.graph.applied(m), std::nullopt, q});
    }
  }
  for (auto it = children.rbegin(); it != children.rend(); ++it) stack_.push_back(std::move(*it));
  return std::move(node.graph);
}

std::vector<RcGraph> enumerateAll(const Permutation& w) {
  std::vector<RcGraph> out;
  RcGraphEnumerator e(w);
  while (auto r = e.next()) out.push_back(std::move(*r));
  return out;
}

namespace {

template <typename Expand>
std::vector<RcGraph> closure(RcGraph root, Expand expand) {
  std::set<RcGraph> seen{root};
  std::deque<RcGraph> queue{std::move(root)};
  while (!queue.empty()) {
    RcGraph g = std::move(queue.front());
    queue.pop_front();
    for (const MoveRecord& m : expand(g)) {
      RcGraph h = g.applied(m);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<RcGraph> ladderClosure(const Permutation& w) {
  return closure(rBot(w), [](const RcGraph& g) { return g.ladderMoves(); });
}

std::vector<RcGraph> chuteClosure(const Permutation& w) {
  return closure(rTop(w), [](const RcGraph& g) { return g.chuteMoves(); });
}

Polynomial schubertSum(const Permutation& w) {
  Polynomial p;
  RcGraphEnumerator e(w);
  while (auto r = e.next()) p += r->monomial();
  return p;
}

}  // namespace schubert
