#include "schubert/word_ops.hpp"

#include <deque>
#include <set>

namespace schubert {

RPairing rPairing(std::span<const int> v, int r) {
  RPairing p;
  std::vector<int> open;
  for (int k = 0; k < static_cast<int>(v.size()); ++k) {
    if (v[k] == r + 1) {
      open.push_back(k);
    } else if (v[k] == r) {
      if (open.empty()) {
        p.unpairedLower.push_back(k);
      } else {
        p.pairs.emplace_back(open.back(), k);
        open.pop_back();
      }
    }
  }
  p.unpairedUpper = std::move(open);
  return p;
}

std::optional<Word> eWord(int r, std::span<const int> v) {
  const RPairing p = rPairing(v, r);
  if (p.t() == 0) return std::nullopt;
  Word out(v.begin(), v.end());
  out[p.unpairedUpper.front()] = r;
  return out;
}

std::optional<Word> fWord(int r, std::span<const int> v) {
  const RPairing p = rPairing(v, r);
  if (p.s() == 0) return std::nullopt;
  Word out(v.begin(), v.end());
  out[p.unpairedLower.back()] = r + 1;
  return out;
}

Word sigmaWord(int r, std::span<const int> v) {
  const RPairing p = rPairing(v, r);
  Word out(v.begin(), v.end());
  std::vector<int> positions = p.unpairedLower;
  positions.insert(positions.end(), p.unpairedUpper.begin(), p.unpairedUpper.end());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    out[positions[k]] = static_cast<int>(k) < p.t() ? r : r + 1;
  }
  return out;
}

std::optional<Tableau> eTableau(int r, const Tableau& t) {
  if (auto w = eWord(r, t.rowWord())) return t.withRowWord(*w);
  return std::nullopt;
}

std::optional<Tableau> fTableau(int r, const Tableau& t) {
  if (auto w = fWord(r, t.rowWord())) return t.withRowWord(*w);
  return std::nullopt;
}

Tableau sigmaTableau(int r, const Tableau& t) { return t.withRowWord(sigmaWord(r, t.rowWord())); }

std::vector<Word> knuthClass(const Word& v) {
  std::set<Word> seen{v};
  std::deque<Word> queue{v};
  while (!queue.empty()) {
    const Word u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 2 < u.size(); ++k) {
      const int a = u[k];
      const int b = u[k + 1];
      const int c = u[k + 2];
      Word x = u;
      // ikj ~ kij with i <= j < k; jik ~ jki with i < j <= k.
      if ((a <= c && c < b) || (b <= c && c < a)) {
        std::swap(x[k], x[k + 1]);
      } else if ((b < a && a <= c) || (c < a && a <= b)) {
        std::swap(x[k + 1], x[k + 2]);
      } else {
        continue;
      }
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace schubert
