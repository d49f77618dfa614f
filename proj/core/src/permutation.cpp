#include "schubert/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("not a permutation of {1.." + std::to_string(n) +
                         "}: " + joinWord(word_));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::fromCode(std::span<const int> code) {
  int n = static_cast<int>(code.size()) + 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] < 0) throw InvalidInput("negative code entry");
    n = std::max(n, static_cast<int>(i) + 1 + code[i]);
  }
  std::vector<int> available(static_cast<std::size_t>(n));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    if (c >= static_cast<int>(available.size())) {
      throw InvalidInput("code is not realizable");
    }
    w.push_back(available[static_cast<std::size_t>(c)]);
    available.erase(available.begin() + c);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::fromWord(std::span<const int> word, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int a : word) {
    if (a < 1 || a >= n) {
      throw InvalidInput("letter " + std::to_string(a) + " out of range for S_" +
                         std::to_string(n));
    }
    std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(a)]);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.empty()) throw InvalidInput("empty permutation text");
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = std::min(text.find(',', pos), text.size());
      const std::string_view item = text.substr(pos, next - pos);
      if (item.empty()) throw InvalidInput("empty entry in permutation text");
      int value = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') {
          throw InvalidInput("bad character in permutation text: " + std::string(text));
        }
        value = value * 10 + (ch - '0');
        if (value > 1000000) throw InvalidInput("permutation entry too large");
      }
      w.push_back(value);
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw InvalidInput("bad character in permutation text: " + std::string(text));
      }
      w.push_back(ch - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (word_[static_cast<std::size_t>(i)] > word_[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

Composition Permutation::code() const {
  const int n = size();
  Composition c(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (word_[static_cast<std::size_t>(j)] < word_[static_cast<std::size_t>(i)])
        ++c[static_cast<std::size_t>(i)];
  return c;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
  return d;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::timesSimple(int i) const {
  if (i < 1 || i >= size()) throw InvalidInput("simple transposition out of range");
  Permutation r = *this;
  std::swap(r.word_[static_cast<std::size_t>(i - 1)], r.word_[static_cast<std::size_t>(i)]);
  return r;
}

Permutation Permutation::embedded(int m) const {
  if (m < size()) throw InvalidInput("cannot embed into a smaller symmetric group");
  std::vector<int> w = word_;
  for (int v = size() + 1; v <= m; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

bool Permutation::isIdentity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::toString() const {
  if (size() <= 9) {
    std::string s;
    for (int v : word_) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  return joinWord(word_, ",");
}

bool containsPattern(const Permutation& w, std::span<const int> pattern) {
  const int k = static_cast<int>(pattern.size());
  const int n = w.size();
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  // Walk all k-subsets of positions in lexicographic order.
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b) {
        const bool lessInPattern = pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)];
        const bool lessInW = w(idx[static_cast<std::size_t>(a)]) < w(idx[static_cast<std::size_t>(b)]);
        if (lessInPattern != lessInW) match = false;
      }
    if (match) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
}

PatternFlags classify(const Permutation& w) {
  static constexpr int k321[] = {3, 2, 1};
  static constexpr int k2143[] = {2, 1, 4, 3};
  PatternFlags f;
  f.is321Avoiding = !containsPattern(w, k321);
  f.isVexillary = !containsPattern(w, k2143);
  f.isGrassmannian = w.descents().size() <= 1;
  return f;
}

std::vector<int> vexillaryFlag(const Permutation& w) {
  if (!classify(w).isVexillary) {
    throw InvalidInput("vexillary flag requested for non-vexillary " + w.toString());
  }
  std::vector<int> flag;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(j) < w(i)) {
        flag.push_back(j - 1);
        break;
      }
    }
  }
  std::sort(flag.begin(), flag.end());
  return flag;
}

bool isReducedWord(std::span<const int> word) {
  int n = 1;
  for (int a : word) {
    if (a < 1) return false;
    n = std::max(n, a + 1);
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int a : word) {
    auto& x = w[static_cast<std::size_t>(a - 1)];
    auto& y = w[static_cast<std::size_t>(a)];
    if (x > y) return false;  // s_a would remove an inversion
    std::swap(x, y);
  }
  return true;
}

Permutation permutationOfWord(std::span<const int> word) {
  int n = 1;
  for (int a : word) n = std::max(n, a + 1);
  return Permutation::fromWord(word, n);
}

void requireReduced(std::span<const int> word, std::string_view what) {
  if (!isReducedWord(word)) {
    throw NotReduced(std::string(what) + ": word " + joinWord(word) + " is not reduced");
  }
}

Word reducedWordOf(const Permutation& w) {
  // Peel off the smallest left descent each time: value a+1 sits before a.
  std::vector<int> pos(static_cast<std::size_t>(w.size()) + 1);
  for (int i = 1; i <= w.size(); ++i) pos[static_cast<std::size_t>(w(i))] = i;
  Word word;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int a = 1; a < w.size(); ++a) {
      if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(a + 1)]) {
        word.push_back(a);
        std::swap(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(a + 1)]);
        progress = true;
        break;
      }
    }
  }
  return word;
}

namespace {

void collectReducedWords(std::vector<int>& pos, Word& prefix, std::vector<Word>& out) {
  bool any = false;
  const int n = static_cast<int>(pos.size()) - 1;
  for (int a = 1; a < n; ++a) {
    if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(a + 1)]) {
      any = true;
      prefix.push_back(a);
      std::swap(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(a + 1)]);
      collectReducedWords(pos, prefix, out);
      std::swap(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(a + 1)]);
      prefix.pop_back();
    }
  }
  if (!any) out.push_back(prefix);
}

}  // namespace

std::vector<Word> allReducedWords(const Permutation& w) {
  std::vector<int> pos(static_cast<std::size_t>(w.size()) + 1);
  for (int i = 1; i <= w.size(); ++i) pos[static_cast<std::size_t>(w(i))] = i;
  std::vector<Word> out;
  Word prefix;
  collectReducedWords(pos, prefix, out);
  return out;
}

std::vector<Permutation> allPermutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Partition partitionOf(std::span<const int> alpha) {
  Partition p;
  for (int a : alpha)
    if (a > 0) p.push_back(a);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

Permutation uOfAlpha(std::span<const int> alpha) {
  // Stable sort of positions by decreasing part: ties keep their order,
  // which is exactly the minimal-length sorting permutation.
  std::vector<int> positions(alpha.size());
  std::iota(positions.begin(), positions.end(), 1);
  std::stable_sort(positions.begin(), positions.end(), [&](int a, int b) {
    return alpha[static_cast<std::size_t>(a - 1)] > alpha[static_cast<std::size_t>(b - 1)];
  });
  if (positions.empty()) return Permutation::identity(1);
  return Permutation(std::move(positions));
}

int sum(std::span<const int> values) { return std::accumulate(values.begin(), values.end(), 0); }

std::string joinWord(std::span<const int> word, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << sep;
    os << word[i];
  }
  return os.str();
}

}  // namespace schubert
