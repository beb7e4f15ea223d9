#include <doctest.h>

#include <random>

#include "clusterkl/census.hpp"
#include "clusterkl/mask.hpp"

using namespace ckl;

namespace {

Mask bits(std::initializer_list<int> vals) {
  Mask m;
  for (int v : vals) m.bits.push_back(static_cast<std::uint8_t>(v));
  return m;
}

}  // namespace

TEST_CASE("subword evaluation") {
  Word w{{2, 3, 1, 2}, 4};
  CHECK(subword_eval(w, bits({1, 1, 1, 1})) == Permutation({3, 4, 1, 2}));
  CHECK(subword_eval(w, bits({0, 0, 0, 0})) == Permutation::identity(4));
  CHECK(subword_eval(Word{{1, 2, 1}, 3}, bits({1, 0, 1})) ==
        Permutation::identity(3));
  CHECK_THROWS_AS(subword_eval(w, bits({1, 0})), domain_error);
}

TEST_CASE("defect statistics") {
  Word w121{{1, 2, 1}, 3};
  MaskStats s = defect_stats(w121, bits({1, 0, 0}));
  CHECK(s.defect_positions == std::vector<int>{3});
  CHECK(s.zero_defects == 1);
  CHECK(s.plain_zeros == 1);
  CHECK(s.d == 1);

  MaskStats full = defect_stats(w121, bits({1, 1, 1}));
  CHECK(full.d == 0);

  Word w2312{{2, 3, 1, 2}, 4};
  MaskStats s2 = defect_stats(w2312, bits({1, 0, 0, 1}));
  CHECK(s2.defect_positions == std::vector<int>{4});
  CHECK(s2.zero_defects == 0);
  CHECK(s2.plain_zeros == 2);
  CHECK(s2.d == 1);
  CHECK(subword_eval(w2312, bits({1, 0, 0, 1})) == Permutation::identity(4));
}

TEST_CASE("defect status never depends on the bit at the position") {
  std::mt19937_64 rng(7);
  std::vector<Word> words = {{{1, 2, 1}, 3},
                             {{1, 2, 3, 2, 1}, 4},
                             {{2, 3, 1, 2, 4, 3}, 5},
                             {{1, 2, 1, 3, 2, 1, 4, 3, 5, 4, 6, 5}, 7}};
  for (const Word& w : words) {
    const int k = w.size();
    for (int trial = 0; trial < 200; ++trial) {
      Mask m;
      for (int j = 0; j < k; ++j) m.bits.push_back(rng() & 1u);
      MaskStats base = defect_stats(w, m);
      for (int j = 0; j < k; ++j) {
        Mask flipped = m;
        flipped.bits[j] ^= 1;
        CHECK(defect_stats(w, flipped).defect_positions ==
              base.defect_positions);
      }
    }
  }
}

TEST_CASE("10* instances") {
  ClusterDecomposition d321 = contract(Permutation({3, 2, 1}));
  CHECK(!is_10star_avoiding(d321, bits({1, 0, 0})));
  CHECK(is_10star_avoiding(d321, bits({1, 1, 1})));

  ClusterDecomposition d5 = contract(Permutation({4, 2, 3, 1}));
  CHECK(!is_10star_avoiding(d5, bits({0, 1, 0, 1, 0})));
  CHECK(is_10star_avoiding(d5, bits({0, 0, 1, 1, 0})));
}

TEST_CASE("mask enumeration") {
  ClusterDecomposition d321 = contract(Permutation({3, 2, 1}));
  CHECK(mask_count(d321, MaskFilter::all) == 8);
  CHECK(mask_count(d321, MaskFilter::ten_star_avoiding) == 6);

  std::vector<std::string> seen;
  enumerate_masks(d321, MaskFilter::ten_star_avoiding,
                  [&](const Mask& m) { seen.push_back(to_string(m)); });
  CHECK(seen == std::vector<std::string>{"000", "001", "010", "011", "110",
                                         "111"});

  ClusterDecomposition dfc = contract(Permutation({3, 4, 1, 2}));
  CHECK(mask_count(dfc, MaskFilter::ten_star_avoiding) == 16);
}

TEST_CASE("deodhar bound") {
  Word w121{{1, 2, 1}, 3};
  CHECK(!deodhar_bound_holds(defect_stats(w121, bits({1, 0, 0})), true));
  CHECK(deodhar_bound_holds(defect_stats(w121, bits({0, 0, 0})), true));
  CHECK(deodhar_bound_holds(defect_stats(Word{{2, 3, 1, 2}, 4},
                                         bits({1, 0, 0, 1})),
                            true));
  CHECK(deodhar_bound_holds(defect_stats(w121, bits({1, 1, 1})), false));
}

TEST_CASE("deodhar elements") {
  CHECK(!is_deodhar_element(Permutation({3, 2, 1})));
  CHECK(is_deodhar_element(Permutation({3, 4, 1, 2})));
  CHECK(!is_deodhar_element(hexagon_element()));
}

TEST_CASE("phi collapse on [3,2,1]") {
  ClusterDecomposition d = contract(Permutation({3, 2, 1}));

  auto [d1, m1] = phi_collapse(d, bits({1, 0, 1}));
  CHECK(d1.word.letters == std::vector<int>{1});
  CHECK(m1 == bits({0}));
  CHECK(d1.cluster_count() == 0);

  auto [d2, m2] = phi_collapse(d, bits({1, 0, 0}));
  CHECK(d2.word.letters == std::vector<int>{1});
  CHECK(m2 == bits({1}));

  CHECK_THROWS_AS(phi_collapse(d, bits({1, 1, 1})), domain_error);
  CHECK_THROWS_AS(phi_collapse(d, bits({0, 0, 0})), domain_error);
}

TEST_CASE("phi properties across all masks at small rank") {
  for (int n = 3; n <= 5; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      if (!classify(w).maximally_clustered) return;
      ClusterDecomposition d = contract(w);
      if (d.cluster_count() == 0) return;
      enumerate_masks(d, MaskFilter::all, [&](const Mask& m) {
        auto sites = ten_star_sites(d, m);
        if (sites.empty()) return;
        PhiTrace trace;
        auto [nd, nm] = phi_collapse_traced(d, m, &trace);

        // evaluation preserved, defects drop by exactly t
        CHECK(subword_eval(nd.word, nm) == subword_eval(d.word, m));
        CHECK(defect_stats(d.word, m).d ==
              defect_stats(nd.word, nm).d + trace.t);

        // the rightmost site disappears, nothing else changes
        auto new_sites = ten_star_sites(nd, nm);
        CHECK(new_sites.size() + 1 == sites.size());
        for (std::size_t i = 0; i + 1 < sites.size(); ++i)
          CHECK(new_sites[i] == sites[i]);

        // structure is still a contracted expression of the same element
        CHECK(verify_decomposition(nd).ok);

        // inverse rewrite recovers the input exactly
        auto [rd, rm] = phi_expand(nd, nm, trace);
        CHECK(rd == d);
        CHECK(rm == m);
      });
    });
  }
}

TEST_CASE("mask parsing") {
  CHECK(to_string(parse_mask("10010")) == "10010");
  CHECK_THROWS_AS(parse_mask("10x"), domain_error);
  CHECK(bits({1, 1}).proper() == false);
  CHECK(bits({1, 0}).proper() == true);
}
