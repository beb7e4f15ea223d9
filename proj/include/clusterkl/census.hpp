#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clusterkl/parallel.hpp"
#include "clusterkl/perm.hpp"

namespace ckl {

std::uint64_t factorial(int n);

// Lexicographic unranking via the factorial number system.
Permutation nth_permutation(int n, std::uint64_t index);

// Serial lexicographic iteration over S_n.
void for_each_permutation(int n,
                          const std::function<void(const Permutation&)>& fn);

struct CensusRow {
  std::string label;
  long long count = 0;
};

// Class counts over S_n, rows sorted by label.
std::vector<CensusRow> census(int n, Execution exec = Execution::parallel);

}  // namespace ckl
