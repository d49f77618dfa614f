#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// r-pairing of a word: each r+1 is an opening and each r a closing
// parenthesis.  Positions are 0-based.  The unpaired letters always read
// r^s (r+1)^t.
struct RPairing {
  std::vector<std::pair<int, int>> pairs;  // (position of r+1, position of r)
  std::vector<int> unpairedLower;          // unpaired r, left to right
  std::vector<int> unpairedUpper;          // unpaired r+1, left to right

  int s() const { return static_cast<int>(unpairedLower.size()); }
  int t() const { return static_cast<int>(unpairedUpper.size()); }
};

RPairing rPairing(std::span<const int> v, int r);

// Leftmost unpaired r+1 becomes r; nullopt when there is none.
std::optional<Word> eWord(int r, std::span<const int> v);
// Rightmost unpaired r becomes r+1; nullopt when there is none.
std::optional<Word> fWord(int r, std::span<const int> v);
// Unpaired r^s (r+1)^t becomes r^t (r+1)^s.
Word sigmaWord(int r, std::span<const int> v);

// The same operators on a tableau through its row word.
std::optional<Tableau> eTableau(int r, const Tableau& t);
std::optional<Tableau> fTableau(int r, const Tableau& t);
Tableau sigmaTableau(int r, const Tableau& t);

// All words Knuth equivalent to v (breadth-first closure of the elementary
// relations).  Exponential; intended for short words.
std::vector<Word> knuthClass(const Word& v);

}  // namespace schubert
