#pragma once

#include <string>
#include <vector>

#include "clusterkl/perm.hpp"

namespace ckl {

// A word in the generators s_1..s_{rank-1}; not necessarily reduced.
struct Word {
  std::vector<int> letters;
  int rank = 1;

  int size() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const Word& a, const Word& b) {
    return a.rank == b.rank && a.letters == b.letters;
  }
};

// Left-to-right right-multiplication from the identity.
Permutation evaluate(const Word& w);

bool is_reduced(const Word& w);

// Canonical reduced word obtained by repeatedly stripping the smallest
// right descent; deterministic, and evaluate(some_reduced_word(w)) == w.
Word some_reduced_word(const Permutation& w);

struct Support {
  std::vector<int> generators;  // sorted
  bool connected = true;        // true iff the set is an integer interval
};

Support support(const Permutation& w);

// Subword test on one fixed reduced word of w, greedy from the right.
bool bruhat_leq(const Permutation& x, const Permutation& w);

// Serialization: comma-separated generator indices, e.g. "2,3,1,2".
std::string to_string(const Word& w);
Word parse_word(const std::string& text);  // rank inferred as max letter + 1

}  // namespace ckl
