#include <sstream>

#include "schubert/error.hpp"
#include "schubert/rc_graph.hpp"

namespace schubert {

std::vector<std::vector<LineMeeting>> traceLines(const CellSet& crosses, int n) {
  std::vector<std::vector<LineMeeting>> meet(n, std::vector<LineMeeting>(n));
  for (int k = 1; k <= n; ++k) {
    int i = k;
    int j = 1;
    bool right = true;
    while (i >= 1) {
      if (j > n || i + j > n + 1) throw InternalError("line left the staircase");
      LineMeeting& m = meet[i - 1][j - 1];
      (right ? m.fromLeft : m.fromBelow) = k;
      if (!crosses.contains({i, j})) right = !right;
      if (right) {
        ++j;
      } else {
        --i;
      }
    }
  }
  return meet;
}

Permutation lineEndpoints(const CellSet& crosses, int n) {
  std::vector<int> w(n, 0);
  for (int k = 1; k <= n; ++k) {
    int i = k;
    int j = 1;
    bool right = true;
    while (i >= 1) {
      if (j > n) throw InternalError("line left the staircase");
      if (!crosses.contains({i, j})) right = !right;
      if (right) {
        ++j;
      } else {
        --i;
      }
    }
    w[k - 1] = j;
  }
  return Permutation(std::move(w));
}

std::string renderLineDiagram(const RcGraph& r) {
  const int n = r.n();
  const Permutation w = r.permutation();
  const Permutation winv = w.inverse();
  std::ostringstream os;
  os << "  ";
  for (int j = 1; j <= n; ++j) os << ' ' << winv(j);
  os << '\n';
  for (int i = 1; i <= n; ++i) {
    os << (i < 10 ? " " : "") << i;
    for (int j = 1; i + j <= n + 1; ++j) os << ' ' << (r.contains({i, j}) ? '+' : '/');
    os << '\n';
  }
  return os.str();
}

}  // namespace schubert
