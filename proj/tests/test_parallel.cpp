// The OpenMP kernels must match their serial reference implementations
// exactly; all merges are integer-exact and commutative.
#include <doctest.h>

#include "clusterkl/census.hpp"
#include "clusterkl/ideals.hpp"
#include "clusterkl/kl.hpp"

using namespace ckl;

TEST_CASE("mask table kernel: serial == parallel") {
  std::vector<Permutation> targets = {
      Permutation({4, 2, 3, 1}), Permutation({3, 4, 1, 2}),
      Permutation({5, 6, 7, 8, 1, 2, 3, 4}),
      sample_mc_hexagon_avoiding(7, 1, 5).front()};
  for (const auto& w : targets) {
    ClusterDecomposition d = contract(w);
    for (MaskFilter f : {MaskFilter::all, MaskFilter::ten_star_avoiding}) {
      auto s = mask_defect_table(d, f, Execution::serial);
      auto p = mask_defect_table(d, f, Execution::parallel);
      CHECK(s == p);
    }
  }
}

TEST_CASE("deodhar sweep: serial == parallel") {
  std::vector<Permutation> targets = {
      Permutation({3, 2, 1}), Permutation({3, 4, 1, 2}),
      Permutation({5, 6, 7, 8, 1, 2, 3, 4}), hexagon_element()};
  for (const auto& w : targets)
    CHECK(is_deodhar_element(w, Execution::serial) ==
          is_deodhar_element(w, Execution::parallel));
}

TEST_CASE("census: serial == parallel") {
  for (int n : {4, 5, 6, 7}) {
    auto s = census(n, Execution::serial);
    auto p = census(n, Execution::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].label == p[i].label);
      CHECK(s[i].count == p[i].count);
    }
  }
}

TEST_CASE("heap sweeps: serial == parallel") {
  PatternClass mc = PatternClass::mc();
  UpperSet us = upper_set(Permutation({3, 2, 1}), mc, kDefaultClassCap,
                          Execution::serial);
  UpperSet up = upper_set(Permutation({3, 2, 1}), mc, kDefaultClassCap,
                          Execution::parallel);
  CHECK(us.members == up.members);

  auto rs = characterization_check(mc, {hexagon_element()}, 6,
                                   kDefaultClassCap, Execution::serial);
  auto rp = characterization_check(mc, {hexagon_element()}, 6,
                                   kDefaultClassCap, Execution::parallel);
  CHECK(rs.equal == rp.equal);
  CHECK(rs.heap_avoiders == rp.heap_avoiders);
  CHECK(rs.pattern_avoiders == rp.pattern_avoiders);
}

TEST_CASE("verify sweep: serial == parallel") {
  SweepReport s = verify_theorem_sweep(5, std::nullopt, 0, Execution::serial);
  SweepReport p = verify_theorem_sweep(5, std::nullopt, 0, Execution::parallel);
  CHECK(s.ok());
  CHECK(p.ok());
  CHECK(s.elements == p.elements);
  CHECK(s.pairs == p.pairs);
}
