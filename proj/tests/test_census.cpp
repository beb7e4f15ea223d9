#include <doctest.h>

#include "clusterkl/census.hpp"

using namespace ckl;

TEST_CASE("factorials and unranking") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(nth_permutation(4, 0) == Permutation::identity(4));
  CHECK(nth_permutation(4, 23) == Permutation({4, 3, 2, 1}));

  // unranking agrees with lexicographic iteration
  std::uint64_t idx = 0;
  for_each_permutation(5, [&](const Permutation& w) {
    CHECK(nth_permutation(5, idx) == w);
    ++idx;
  });
  CHECK(idx == 120);
}

TEST_CASE("census rows") {
  auto rows = census(4, Execution::serial);
  REQUIRE(rows.size() == 6);
  auto get = [&](const std::string& label) {
    for (const auto& r : rows)
      if (r.label == label) return r.count;
    return -1ll;
  };
  CHECK(get("total") == 24);
  CHECK(get("fully_commutative") == 14);
  CHECK(get("maximally_clustered") == 21);
  CHECK(get("freely_braided") == 20);
  CHECK(get("hexagon_pattern_free") == 24);
  CHECK(get("mc_hexagon_avoiding") == 21);
  // label-sorted
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i - 1].label < rows[i].label);
}
