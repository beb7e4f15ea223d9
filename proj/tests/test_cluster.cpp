#include <doctest.h>

#include "clusterkl/census.hpp"
#include "clusterkl/cluster.hpp"
#include "oracles.hpp"

using namespace ckl;

TEST_CASE("contract on the base cases") {
  ClusterDecomposition d321 = contract(Permutation({3, 2, 1}));
  CHECK(d321.word.letters == std::vector<int>{1, 2, 1});
  REQUIRE(d321.cluster_count() == 1);
  CHECK(d321.clusters[0].k == 1);
  CHECK(d321.clusters[0].m == 0);
  CHECK(verify_decomposition(d321).ok);

  ClusterDecomposition dfc = contract(Permutation({3, 4, 1, 2}));
  CHECK(dfc.cluster_count() == 0);
  CHECK(dfc.word.letters == std::vector<int>{2, 3, 1, 2});
  CHECK(verify_decomposition(dfc).ok);

  ClusterDecomposition d4231 = contract(Permutation({4, 2, 3, 1}));
  CHECK(d4231.word.letters == std::vector<int>{1, 2, 3, 2, 1});
  REQUIRE(d4231.cluster_count() == 1);
  CHECK(d4231.clusters[0].k == 2);
  CHECK(count_321(Permutation({4, 2, 3, 1})) == 2);
  CHECK(verify_decomposition(d4231).ok);

  CHECK_THROWS_AS(contract(Permutation({4, 3, 2, 1})), domain_error);
}

TEST_CASE("contract separated clusters") {
  Permutation w({3, 2, 5, 4, 1});
  ClusterDecomposition d = contract(w);
  CHECK(evaluate(d.word) == w);
  CHECK(d.cluster_count() == 2);
  CHECK(verify_decomposition(d).ok);
}

TEST_CASE("canonicalize_cluster") {
  BraidCluster c = canonicalize_cluster(Word{{3, 2, 3}, 4});
  CHECK(c.m == 1);
  CHECK(c.k == 1);
  CHECK(c.letters() == std::vector<int>{2, 3, 2});

  BraidCluster c2 = canonicalize_cluster(Word{{2, 3, 2}, 4});
  CHECK(c2 == BraidCluster{1, 1});

  BraidCluster c3 = canonicalize_cluster(Word{{1, 2, 3, 2, 1}, 4});
  CHECK(c3 == BraidCluster{0, 2});

  // non-canonical but valid cluster word
  BraidCluster c4 = canonicalize_cluster(Word{{1, 3, 2, 3, 1}, 4});
  CHECK(c4 == BraidCluster{0, 2});

  CHECK_THROWS_AS(canonicalize_cluster(Word{{1, 2}, 3}), domain_error);
  CHECK_THROWS_AS(canonicalize_cluster(Word{{1, 2, 1, 2, 1}, 3}), domain_error);
  CHECK_THROWS_AS(canonicalize_cluster(Word{{1, 3, 1}, 4}), domain_error);
}

TEST_CASE("verify_decomposition flags corrupted input") {
  ClusterDecomposition d = contract(Permutation({3, 2, 1}));
  d.word.letters.push_back(1);  // no longer reduced
  DecompositionCheck check = verify_decomposition(d);
  CHECK(!check.ok);
  CHECK(!check.reasons.empty());

  ClusterDecomposition d2 = contract(Permutation({4, 2, 3, 1}));
  d2.clusters[0].k = 1;  // claims the wrong cluster
  CHECK(!verify_decomposition(d2).ok);
}

TEST_CASE("truncate_last_cluster") {
  ClusterDecomposition d321 = contract(Permutation({3, 2, 1}));
  ClusterDecomposition t = truncate_last_cluster(d321);
  CHECK(t.word.letters == std::vector<int>{1, 2});
  CHECK(t.cluster_count() == 0);
  CHECK(verify_decomposition(t).ok);

  ClusterDecomposition d4231 = contract(Permutation({4, 2, 3, 1}));
  ClusterDecomposition t2 = truncate_last_cluster(d4231);
  CHECK(t2.word.letters == std::vector<int>{1, 2, 3});
  CHECK(verify_decomposition(t2).ok);

  CHECK_THROWS_AS(truncate_last_cluster(contract(Permutation({3, 4, 1, 2}))),
                  domain_error);
}

TEST_CASE("exhaustive contraction sweep at small rank") {
  for (int n = 3; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      if (!classify(w).maximally_clustered) return;
      ClusterDecomposition d = contract(w);
      CHECK(evaluate(d.word) == w);
      CHECK(is_reduced(d.word));
      DecompositionCheck check = verify_decomposition(d);
      CHECK(check.ok);
      int sum = 0;
      for (const auto& c : d.clusters) sum += c.k;
      CHECK(sum == count_321(w));
      CHECK(d.cluster_count() == oracle::cluster_instances(w));
      CHECK(oracle::middle_roles_unique(w));
    });
  }
}

TEST_CASE("truncation preserves the contracted structure") {
  for_each_permutation(6, [](const Permutation& w) {
    Classification c = classify(w);
    if (!c.maximally_clustered) return;
    ClusterDecomposition d = contract(w);
    while (d.cluster_count() > 0) {
      d = truncate_last_cluster(d);
      CHECK(is_reduced(d.word));
      CHECK(verify_decomposition(d).ok);
      Permutation u = evaluate(d.word);
      Classification cu = classify(u);
      CHECK(cu.maximally_clustered);
      CHECK(cu.hexagon_pattern_free);
    }
  });
}
