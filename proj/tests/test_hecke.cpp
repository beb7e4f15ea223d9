#include <doctest.h>

#include <random>

#include "clusterkl/census.hpp"
#include "clusterkl/hecke.hpp"

using namespace ckl;

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly one = LaurentPoly::constant(1);
  LaurentPoly q = LaurentPoly::q_power(1);

  CHECK(q.bar() == LaurentPoly::q_power(-1));
  LaurentPoly p = one + q + LaurentPoly::q_power(3, 2);
  CHECK(p.bar().bar() == p);
  CHECK((one + q) * one == one + q);
  CHECK((one + q) * (one + q) == one + q.scaled(2) + LaurentPoly::q_power(2));
  CHECK((q - q).is_zero());
  CHECK(q.shifted(-2) == one);
  CHECK(p.coeff(6) == 2);
}

TEST_CASE("polynomial rendering") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::constant(1).str() == "1");
  CHECK((LaurentPoly::constant(1) + LaurentPoly::q_power(1)).str() == "1 + q");
  CHECK((LaurentPoly::constant(1) + LaurentPoly::q_power(2, 3)).str() ==
        "1 + 3q^{2}");
  CHECK(LaurentPoly::v_power(-3).str() == "q^{-3/2}");
  CHECK((LaurentPoly::v_power(-1) - LaurentPoly::constant(2)).str() ==
        "q^{-1/2} - 2");
  CHECK((LaurentPoly::q_power(-1) - LaurentPoly::constant(1)).str() ==
        "q^{-1} - 1");
}

TEST_CASE("T-basis multiplication") {
  HeckeElement ts1 = HeckeElement::t_basis(Permutation({2, 1, 3}));
  HeckeElement sq = t_multiply_right(ts1, 1);
  // (T_s)^2 = (q-1) T_s + q T_1
  CHECK(sq.coeff(Permutation({2, 1, 3})) ==
        LaurentPoly::q_power(1) - LaurentPoly::constant(1));
  CHECK(sq.coeff(Permutation::identity(3)) == LaurentPoly::q_power(1));

  CHECK(t_multiply_right(HeckeElement::t_one(3), 2) ==
        HeckeElement::t_basis(Permutation({1, 3, 2})));
  CHECK(t_multiply_right(ts1, 2) ==
        HeckeElement::t_basis(evaluate(Word{{1, 2}, 3})));
}

TEST_CASE("bar involution") {
  CHECK(bar_involution(HeckeElement::t_one(3)) == HeckeElement::t_one(3));

  HeckeElement b = bar_involution(HeckeElement::t_basis(Permutation({2, 1, 3})));
  CHECK(b.coeff(Permutation({2, 1, 3})) == LaurentPoly::q_power(-1));
  CHECK(b.coeff(Permutation::identity(3)) ==
        LaurentPoly::q_power(-1) - LaurentPoly::constant(1));

  // involution on random elements of H(S_4)
  std::mt19937_64 rng(11);
  BarCache cache(4);
  for (int trial = 0; trial < 12; ++trial) {
    HeckeElement h(4);
    for_each_permutation(4, [&](const Permutation& x) {
      if (rng() % 3 == 0)
        h.add(x, LaurentPoly::v_power(static_cast<int>(rng() % 7) - 3,
                                      static_cast<int>(rng() % 5) - 2));
    });
    CHECK(bar_involution(bar_involution(h, cache), cache) == h);
  }
}

TEST_CASE("h over masks") {
  ClusterDecomposition trivial = contract(Permutation::identity(3));
  CHECK(h_of_masks(trivial, MaskFilter::all) == HeckeElement::t_one(3));

  ClusterDecomposition d1 = contract(Permutation({2, 1}));
  HeckeElement h1 = h_of_masks(d1, MaskFilter::all);
  CHECK(h1.coeff(Permutation::identity(2)) == LaurentPoly::v_power(-1));
  CHECK(h1.coeff(Permutation({2, 1})) == LaurentPoly::v_power(-1));

  ClusterDecomposition d321 = contract(Permutation({3, 2, 1}));
  HeckeElement he = h_of_masks(d321, MaskFilter::ten_star_avoiding);
  CHECK(is_bar_invariant(he));

  // explicit mask list agrees with the filtered sweep
  std::vector<Mask> listed;
  enumerate_masks(d321, MaskFilter::ten_star_avoiding,
                  [&](const Mask& m) { listed.push_back(m); });
  CHECK(h_of_masks(d321, listed) == he);
}

TEST_CASE("cprime examples") {
  HeckeElement c1 = cprime(Permutation({2, 1}));
  CHECK(c1.coeff(Permutation::identity(2)) == LaurentPoly::v_power(-1));
  CHECK(c1.coeff(Permutation({2, 1})) == LaurentPoly::v_power(-1));

  CHECK(cprime(Permutation::identity(4)) == HeckeElement::t_one(4));

  HeckeElement c321 = cprime(Permutation({3, 2, 1}));
  CHECK(c321.terms().size() == 6);
  for (const auto& [x, p] : c321.terms()) CHECK(p == LaurentPoly::v_power(-3));
  CHECK(is_bar_invariant(c321));

  CHECK_THROWS_AS(cprime(Permutation({4, 3, 2, 1})), domain_error);
}

TEST_CASE("bar invariance flags") {
  CHECK(is_bar_invariant(HeckeElement::t_one(3)));
  CHECK(!is_bar_invariant(HeckeElement::t_basis(Permutation({2, 1, 3}))));
  CHECK(is_bar_invariant(cprime(Permutation({4, 2, 3, 1}))));
}

TEST_CASE("full mask set equals the product of rank-1 elements") {
  std::vector<Permutation> targets = {
      Permutation({3, 2, 1}),       Permutation({4, 2, 3, 1}),
      Permutation({3, 4, 1, 2}),    Permutation({4, 2, 5, 3, 1}),
      Permutation({2, 1, 4, 3, 6, 5}), Permutation({3, 5, 1, 6, 2, 4})};
  for (const Permutation& w : targets) {
    ClusterDecomposition d = contract(w);
    REQUIRE(d.word.size() <= 10);
    CHECK(h_of_masks(d, MaskFilter::all) == cprime_letter_product(d.word));
  }
}

TEST_CASE("admissibility of the 10*-avoiding mask set at rank 4") {
  for_each_permutation(4, [](const Permutation& w) {
    if (!classify(w).mc_hexagon_avoiding) return;
    ClusterDecomposition d = contract(w);
    // all-ones in E_w, closure under last-bit flip
    Mask ones;
    ones.bits.assign(d.word.size(), 1);
    CHECK(is_10star_avoiding(d, ones));
    enumerate_masks(d, MaskFilter::ten_star_avoiding, [&](const Mask& m) {
      if (m.size() == 0) return;
      Mask flipped = m;
      flipped.bits.back() ^= 1;
      CHECK(is_10star_avoiding(d, flipped));
    });
    CHECK(is_bar_invariant(h_of_masks(d, MaskFilter::ten_star_avoiding)));
  });
}

TEST_CASE("degree bound on cprime coefficients") {
  for_each_permutation(5, [](const Permutation& w) {
    if (!classify(w).mc_hexagon_avoiding) return;
    HeckeElement c = cprime(w);
    const int lw = length(w);
    for (const auto& [x, p] : c.terms()) {
      LaurentPoly pq = p.shifted(lw);  // P_{x,w} in v^2 = q
      CHECK(pq.only_even_exponents());
      CHECK(pq.nonnegative());
      if (x == w)
        CHECK(pq == LaurentPoly::constant(1));
      else
        CHECK(pq.max_exp() <= lw - length(x) - 1);
    }
  });
}
