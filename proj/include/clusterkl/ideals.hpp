#pragma once

#include "clusterkl/heap.hpp"
#include "clusterkl/parallel.hpp"

namespace ckl {

inline constexpr int kIdealRankCap = 8;

// A permutation class characterized by avoiding a finite 1-line pattern set;
// the empty set gives the class of all permutations.
struct PatternClass {
  std::string name;
  std::vector<Permutation> patterns;

  static PatternClass mc();
  static PatternClass fb();
  static PatternClass all();
  static PatternClass by_name(const std::string& name);

  bool contains(const Permutation& w) const;
};

// U^P(h): the class members of rank r(h) that heap-contain h.
struct UpperSet {
  Permutation h;
  PatternClass cls;
  std::vector<Permutation> members;  // sorted
};

UpperSet upper_set(const Permutation& h, const PatternClass& cls,
                   int cap = kDefaultClassCap,
                   Execution exec = Execution::parallel);

// All q in S_{r(p)+1} containing p as a 1-line pattern (each arises from a
// single-entry insertion), sorted and deduplicated.
std::vector<Permutation> one_point_extensions(const Permutation& p);

// Ideal pattern test: every class member of rank r(p)+1 containing p as a
// 1-line pattern also heap-contains it.
bool is_ideal_pattern(const Permutation& p, const PatternClass& cls,
                      int cap = kDefaultClassCap);

struct CharacterizationReport {
  bool equal = true;
  long class_size = 0;
  long heap_avoiders = 0;
  long pattern_avoiders = 0;
  std::vector<Permutation> heap_only;     // heap-avoid but contain a pattern
  std::vector<Permutation> pattern_only;  // avoid the patterns but heap-contain
};

// Checks that class members of S_n heap-avoiding every h in H are exactly
// those avoiding the union of the U^P(h) as 1-line patterns.
CharacterizationReport characterization_check(const PatternClass& cls,
                                              const std::vector<Permutation>& H,
                                              int n, int cap = kDefaultClassCap,
                                              Execution exec = Execution::parallel);

}  // namespace ckl
