#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

// A word over positive integers: a reduced word, a compatible sequence, a
// tableau reading word, ...
using Word = std::vector<int>;

// Finite sequence of nonnegative integers.
using Composition = std::vector<int>;

// Weakly decreasing composition without trailing zeros.
using Partition = std::vector<int>;

// Permutation of {1..n} in one-line notation.  All positions are 1-based.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless `word` is a bijection of {1..word.size()}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);
  // Inverse of code(); the result lives in S_n with n = max(code.size()+1, needed).
  static Permutation fromCode(std::span<const int> code);
  // Product s_{a_1} s_{a_2} ... acting on positions, in S_n.
  // Throws InvalidInput if a letter exceeds n-1.
  static Permutation fromWord(std::span<const int> word, int n);
  // Digits when n <= 9 ("215463"), otherwise comma separated.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  // w_i, 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }

  int length() const;
  // (c_1, ..., c_{n-1}), c_i = #{j > i : w_j < w_i}.
  Composition code() const;
  std::vector<int> descents() const;
  Permutation inverse() const;
  // w s_i: swaps positions i and i+1.
  Permutation timesSimple(int i) const;
  // Same permutation viewed in S_m, m >= n.
  Permutation embedded(int m) const;
  bool isIdentity() const;

  std::string toString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

struct PatternFlags {
  bool is321Avoiding = true;
  bool isVexillary = true;  // 2143-avoiding
  bool isGrassmannian = true;  // at most one descent
};

PatternFlags classify(const Permutation& w);

// True if w contains the pattern given in one-line notation.
bool containsPattern(const Permutation& w, std::span<const int> pattern);

// Weakly increasing rearrangement of d_i = min{j > i : w_j < w_i} - 1 over
// positions with a nonempty set.  Throws InvalidInput for non-vexillary w.
std::vector<int> vexillaryFlag(const Permutation& w);

// True if s_{a_1}...s_{a_k} has length k.
bool isReducedWord(std::span<const int> word);

// Permutation of a word in the smallest S_n containing its letters.
Permutation permutationOfWord(std::span<const int> word);

// Throws NotReduced unless `word` is reduced.
void requireReduced(std::span<const int> word, std::string_view what);

// Some reduced word for w (lexicographically smallest by repeatedly
// removing the first descent from the right).
Word reducedWordOf(const Permutation& w);

// Every reduced word of w, in lexicographic order.
std::vector<Word> allReducedWords(const Permutation& w);

// All permutations of S_n in lexicographic order.
std::vector<Permutation> allPermutations(int n);

// Decreasing rearrangement with zeros dropped.
Partition partitionOf(std::span<const int> alpha);

// Minimal-length u with (alpha_{u_1}, alpha_{u_2}, ...) weakly decreasing.
Permutation uOfAlpha(std::span<const int> alpha);

int sum(std::span<const int> values);

std::string joinWord(std::span<const int> word, std::string_view sep = ",");

}  // namespace schubert
