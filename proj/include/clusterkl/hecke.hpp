#pragma once

#include <map>
#include <string>

#include "clusterkl/mask.hpp"

namespace ckl {

// Exact integer Laurent polynomial in v = q^{1/2}; exponents are powers of v
// so that the q^{-l(w)/2} prefactors stay integral.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(long long c);
  static LaurentPoly v_power(int e, long long c = 1);
  static LaurentPoly q_power(int e, long long c = 1) { return v_power(2 * e, c); }

  bool is_zero() const { return c_.empty(); }
  long long coeff(int v_exp) const;
  void add_term(int v_exp, long long c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly bar() const;               // v -> v^{-1}
  LaurentPoly shifted(int v_exp) const;  // multiply by v^{v_exp}
  LaurentPoly scaled(long long c) const;

  int min_exp() const;  // require !is_zero()
  int max_exp() const;
  bool only_even_exponents() const;
  bool nonnegative() const;

  // "1 + q" when all v-exponents are even, "q^{-3/2} + q^{-1/2}" otherwise.
  std::string str() const;

  const std::map<int, long long>& coeffs() const { return c_; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, long long> c_;  // v-exponent -> coefficient, no zeros
};

// Finitely supported map Permutation -> LaurentPoly in the T-basis.
class HeckeElement {
 public:
  explicit HeckeElement(int rank) : rank_(rank) {}
  static HeckeElement t_one(int rank);
  static HeckeElement t_basis(const Permutation& w);

  int rank() const { return rank_; }
  const std::map<Permutation, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const Permutation& x) const;
  void add(const Permutation& x, const LaurentPoly& p);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement scaled(const LaurentPoly& p) const;
  HeckeElement shifted(int v_exp) const;

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  int rank_;
  std::map<Permutation, LaurentPoly> terms_;
};

// T_x T_{s_i} via the quadratic relation (T_s)^2 = (q-1) T_s + q T_1.
HeckeElement t_multiply_right(const HeckeElement& h, int i);

// Per-rank memo for bar(T_x) = (T_{x^{-1}})^{-1}.
class BarCache {
 public:
  explicit BarCache(int rank) : rank_(rank) {}
  const HeckeElement& bar_of_t(const Permutation& x);

 private:
  int rank_;
  std::map<Permutation, HeckeElement> memo_;
};

HeckeElement bar_involution(const HeckeElement& h);
HeckeElement bar_involution(const HeckeElement& h, BarCache& cache);
bool is_bar_invariant(const HeckeElement& h);
bool is_bar_invariant(const HeckeElement& h, BarCache& cache);

// Defect generating polynomials q^{d} accumulated per subword product over
// the selected mask set; the shared kernel behind h(E) and the KL tables.
std::map<Permutation, LaurentPoly> mask_defect_table(
    const ClusterDecomposition& d, MaskFilter filter,
    Execution exec = Execution::parallel);

// h(E) = q^{-l(w)/2} sum_{masks} q^{d} T_{w^sigma}.
HeckeElement h_of_masks(const ClusterDecomposition& d, MaskFilter filter,
                        Execution exec = Execution::parallel);
HeckeElement h_of_masks(const ClusterDecomposition& d,
                        const std::vector<Mask>& masks);

// Kazhdan-Lusztig basis element C'_w over the 10*-avoiding masks of
// contract(w); requires w maximally clustered and hexagon-pattern-free.
HeckeElement cprime(const Permutation& w, Execution exec = Execution::parallel);

// Product C'_{s_{w_1}} ... C'_{s_{w_k}} along the letters of a word; equals
// h over the full mask set.
HeckeElement cprime_letter_product(const Word& w);

}  // namespace ckl
