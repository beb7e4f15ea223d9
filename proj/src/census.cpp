#include "clusterkl/census.hpp"

#include <algorithm>

namespace ckl {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation nth_permutation(int n, std::uint64_t index) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> line;
  line.reserve(n);
  std::uint64_t rem = index;
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t f = factorial(i);
    int digit = static_cast<int>(rem / f);
    rem %= f;
    line.push_back(pool[digit]);
    pool.erase(pool.begin() + digit);
  }
  return Permutation(std::move(line));
}

void for_each_permutation(int n,
                          const std::function<void(const Permutation&)>& fn) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  do {
    fn(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
}

namespace {

struct Counters {
  long long total = 0;
  long long fully_commutative = 0;
  long long freely_braided = 0;
  long long maximally_clustered = 0;
  long long hexagon_pattern_free = 0;
  long long mc_hexagon_avoiding = 0;

  void absorb(const Classification& c) {
    ++total;
    if (c.fully_commutative) ++fully_commutative;
    if (c.freely_braided) ++freely_braided;
    if (c.maximally_clustered) ++maximally_clustered;
    if (c.hexagon_pattern_free) ++hexagon_pattern_free;
    if (c.mc_hexagon_avoiding) ++mc_hexagon_avoiding;
  }
  void merge(const Counters& o) {
    total += o.total;
    fully_commutative += o.fully_commutative;
    freely_braided += o.freely_braided;
    maximally_clustered += o.maximally_clustered;
    hexagon_pattern_free += o.hexagon_pattern_free;
    mc_hexagon_avoiding += o.mc_hexagon_avoiding;
  }
};

std::vector<CensusRow> rows_of(const Counters& c) {
  std::vector<CensusRow> rows = {
      {"freely_braided", c.freely_braided},
      {"fully_commutative", c.fully_commutative},
      {"hexagon_pattern_free", c.hexagon_pattern_free},
      {"maximally_clustered", c.maximally_clustered},
      {"mc_hexagon_avoiding", c.mc_hexagon_avoiding},
      {"total", c.total},
  };
  return rows;  // already label-sorted
}

}  // namespace

std::vector<CensusRow> census(int n, Execution exec) {
  Counters counters;
  if (exec == Execution::serial || thread_count() == 1) {
    for_each_permutation(n, [&](const Permutation& w) {
      counters.absorb(classify(w));
    });
    return rows_of(counters);
  }
#ifdef _OPENMP
  const std::uint64_t total = factorial(n);
  const int nt = thread_count();
  std::vector<Counters> parts(nt);
#pragma omp parallel for schedule(static) num_threads(nt)
  for (int t = 0; t < nt; ++t) {
    std::uint64_t lo = total * t / nt;
    std::uint64_t hi = total * (t + 1) / nt;
    if (lo >= hi) continue;
    std::vector<int> line = nth_permutation(n, lo).oneline();
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      parts[t].absorb(classify(Permutation(line)));
      std::next_permutation(line.begin(), line.end());
    }
  }
  for (const auto& part : parts) counters.merge(part);
  return rows_of(counters);
#else
  for_each_permutation(n, [&](const Permutation& w) {
    counters.absorb(classify(w));
  });
  return rows_of(counters);
#endif
}

}  // namespace ckl
