// Times the OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <cstdio>
#include <string>

#include "clusterkl/census.hpp"
#include "clusterkl/ideals.hpp"
#include "clusterkl/kl.hpp"

using namespace ckl;

namespace {

template <typename F>
double seconds(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void report(const std::string& name, double serial, double parallel) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n",
              name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

// Longest maximally-clustered hexagon-pattern-free element of S_n.
Permutation longest_target(int n) {
  Permutation best = Permutation::identity(n);
  int best_len = 0;
  for_each_permutation(n, [&](const Permutation& w) {
    if (length(w) > best_len && classify(w).mc_hexagon_avoiding) {
      best = w;
      best_len = length(w);
    }
  });
  return best;
}

}  // namespace

int main() {
  apply_thread_env();
  std::printf("threads: %d\n", thread_count());

  {
    Permutation w({5, 6, 7, 8, 1, 2, 3, 4});  // length-16 mask space, 2^16
    bool rs = true, rp = true;
    double ts = seconds([&] {
      for (int rep = 0; rep < 8; ++rep)
        rs = rs && is_deodhar_element(w, Execution::serial);
    });
    double tp = seconds([&] {
      for (int rep = 0; rep < 8; ++rep)
        rp = rp && is_deodhar_element(w, Execution::parallel);
    });
    if (rs != rp) std::printf("MISMATCH in deodhar sweep\n");
    report("deodhar mask sweep (8x)", ts, tp);
  }

  {
    Permutation w = longest_target(7);
    std::printf("kl target: %s (length %d)\n", to_string(w).c_str(), length(w));
    ClusterDecomposition d = contract(w);
    std::map<Permutation, LaurentPoly> s, p;
    double ts = seconds([&] {
      for (int rep = 0; rep < 50; ++rep)
        s = mask_defect_table(d, MaskFilter::ten_star_avoiding,
                              Execution::serial);
    });
    double tp = seconds([&] {
      for (int rep = 0; rep < 50; ++rep)
        p = mask_defect_table(d, MaskFilter::ten_star_avoiding,
                              Execution::parallel);
    });
    if (!(s == p)) std::printf("MISMATCH in mask table\n");
    report("kl mask table (50x)", ts, tp);
  }

  {
    std::vector<CensusRow> s, p;
    double ts = seconds([&] { s = census(8, Execution::serial); });
    double tp = seconds([&] { p = census(8, Execution::parallel); });
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i].count != p[i].count) std::printf("MISMATCH in census\n");
    report("census n=8", ts, tp);
  }

  {
    PatternClass mc = PatternClass::mc();
    std::vector<Permutation> H = {hexagon_element()};
    CharacterizationReport s, p;
    double ts =
        seconds([&] { s = characterization_check(mc, H, 7, 10000,
                                                 Execution::serial); });
    double tp =
        seconds([&] { p = characterization_check(mc, H, 7, 10000,
                                                 Execution::parallel); });
    if (s.heap_avoiders != p.heap_avoiders)
      std::printf("MISMATCH in characterization\n");
    report("hexagon heap sweep n=7", ts, tp);
  }

  return 0;
}
