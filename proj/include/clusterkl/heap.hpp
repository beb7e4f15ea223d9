#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterkl/words.hpp"

namespace ckl {

inline constexpr int kMaxHeapEntries = 128;
inline constexpr int kClassWordCap = 24;      // word length cap for class BFS
inline constexpr int kDefaultClassCap = 10000;

using EntrySet = std::bitset<kMaxHeapEntries>;

// The labeled poset of a commutativity class, embedded as lattice points:
// entry i is word position i (0-based), its column is the letter, and its
// level is the coalesced longest-chain height.  The order relation is the
// transitive closure of i < j for earlier non-commuting letters.
struct Heap {
  Word word;
  std::vector<int> level;
  std::vector<EntrySet> above;  // above[i] = { j : entry i < entry j }
  std::vector<EntrySet> below;
  std::vector<std::pair<int, int>> covers;        // (lower, upper)
  std::vector<std::vector<int>> columns;          // per column, by level

  int size() const { return word.size(); }
  int column(int e) const { return word.letters[e]; }
  bool less(int a, int b) const { return above[a].test(b); }
};

Heap heap_of(const Word& w);  // NotReduced when the word is not reduced

// Lexicographically least word in the commutativity class; heap-intrinsic,
// so two words commute to each other iff their canonical words agree.
Word canonical_word(const Heap& h);

// All heaps of w, via search over classes connected by braid moves.
// Throws CapExceeded past `cap` classes or word length kClassWordCap.
std::vector<Heap> commutativity_classes(const Permutation& w,
                                        int cap = kDefaultClassCap);

// True iff some heap of w contains a column-shifted heap of some
// commutativity class of h as a convex labeled subposet.
bool heap_contains(const Permutation& w, const Permutation& h,
                   int cap = kDefaultClassCap);

// Direct convex-subposet search against the hexagon by default; with
// pattern_fast_path, maximally-clustered w are decided by avoidance of the
// four rank-8 1-line patterns instead.
bool heap_avoids_hexagon(const Permutation& w, int cap = kDefaultClassCap,
                         bool pattern_fast_path = false);

std::vector<Word> linear_extensions(const Heap& h, std::size_t cap);

// Strings drawn bottom-to-top; they cross at mask-value-1 entries and bounce
// at mask-value-0 entries.  Without a mask every entry crosses and the top
// reading recovers evaluate(word).
struct StringDiagram {
  int rank = 1;
  std::vector<std::array<int, 2>> meets;  // strings meeting at each entry
  std::vector<bool> crossed;
  std::vector<std::vector<int>> states;   // states[t] = arrangement after t entries
  Permutation top;
};

StringDiagram string_diagram(const Heap& h,
                             const std::vector<std::uint8_t>* mask = nullptr);

// Lattice rendering; marks (one char per entry) carry the mask decorations:
// '*' mask-value 1, 'o' plain-zero, 'D' zero-defect.
std::string render_ascii(const Heap& h,
                         const std::vector<char>* marks = nullptr);

}  // namespace ckl
