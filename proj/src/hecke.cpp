#include "clusterkl/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ckl {

LaurentPoly LaurentPoly::constant(long long c) { return v_power(0, c); }

LaurentPoly LaurentPoly::v_power(int e, long long c) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = c;
  return p;
}

long long LaurentPoly::coeff(int v_exp) const {
  auto it = c_.find(v_exp);
  return it == c_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int v_exp, long long c) {
  if (c == 0) return;
  auto [it, fresh] = c_.try_emplace(v_exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (auto [ea, ca] : a.c_)
    for (auto [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (auto [e, c] : c_) out.c_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int v_exp) const {
  LaurentPoly out;
  for (auto [e, c] : c_) out.c_[e + v_exp] = c;
  return out;
}

LaurentPoly LaurentPoly::scaled(long long c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (auto [e, k] : c_) out.c_[e] = k * c;
  return out;
}

int LaurentPoly::min_exp() const { return c_.begin()->first; }
int LaurentPoly::max_exp() const { return c_.rbegin()->first; }

bool LaurentPoly::only_even_exponents() const {
  for (auto [e, c] : c_)
    if (e % 2 != 0) return false;
  return true;
}

bool LaurentPoly::nonnegative() const {
  for (auto [e, c] : c_)
    if (c < 0) return false;
  return true;
}

namespace {

std::string q_exponent_string(int v_exp) {
  // v_exp as a power of q, reduced: even -> integer, odd -> halves.
  if (v_exp % 2 == 0) return std::to_string(v_exp / 2);
  return std::to_string(v_exp) + "/2";
}

}  // namespace

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : c_) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    if (e == 2)
      os << "q";
    else
      os << "q^{" << q_exponent_string(e) << "}";
  }
  return os.str();
}

HeckeElement HeckeElement::t_one(int rank) {
  return t_basis(Permutation::identity(rank));
}

HeckeElement HeckeElement::t_basis(const Permutation& w) {
  HeckeElement h(w.rank());
  h.terms_[w] = LaurentPoly::constant(1);
  return h;
}

LaurentPoly HeckeElement::coeff(const Permutation& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Permutation& x, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(x, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, p] : o.terms_) add(x, p);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, p] : o.terms_) add(x, p.scaled(-1));
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& p) const {
  HeckeElement out(rank_);
  if (p.is_zero()) return out;
  for (const auto& [x, c] : terms_) out.terms_[x] = c * p;
  return out;
}

HeckeElement HeckeElement::shifted(int v_exp) const {
  HeckeElement out(rank_);
  for (const auto& [x, c] : terms_) out.terms_[x] = c.shifted(v_exp);
  return out;
}

HeckeElement t_multiply_right(const HeckeElement& h, int i) {
  static const LaurentPoly q = LaurentPoly::q_power(1);
  static const LaurentPoly q_minus_1 = LaurentPoly::q_power(1) - LaurentPoly::constant(1);
  HeckeElement out(h.rank());
  for (const auto& [x, p] : h.terms()) {
    Permutation xs = right_multiply(x, i);
    if (is_right_descent(x, i)) {
      out.add(x, p * q_minus_1);
      out.add(xs, p * q);
    } else {
      out.add(xs, p);
    }
  }
  return out;
}

const HeckeElement& BarCache::bar_of_t(const Permutation& x) {
  auto it = memo_.find(x);
  if (it != memo_.end()) return it->second;
  // bar(T_x) = (T_{x^{-1}})^{-1} = T_{a_1}^{-1} ... T_{a_k}^{-1} for a
  // reduced word a_1..a_k of x, with T_s^{-1} = q^{-1} T_s + (q^{-1}-1) T_1.
  static const LaurentPoly q_inv = LaurentPoly::q_power(-1);
  static const LaurentPoly q_inv_minus_1 =
      LaurentPoly::q_power(-1) - LaurentPoly::constant(1);
  HeckeElement acc = HeckeElement::t_one(rank_);
  for (int a : some_reduced_word(x).letters) {
    HeckeElement next = t_multiply_right(acc, a).scaled(q_inv);
    next += acc.scaled(q_inv_minus_1);
    acc = std::move(next);
  }
  return memo_.emplace(x, std::move(acc)).first->second;
}

HeckeElement bar_involution(const HeckeElement& h, BarCache& cache) {
  HeckeElement out(h.rank());
  for (const auto& [x, p] : h.terms()) {
    const HeckeElement& bt = cache.bar_of_t(x);
    LaurentPoly pb = p.bar();
    for (const auto& [y, c] : bt.terms()) out.add(y, c * pb);
  }
  return out;
}

HeckeElement bar_involution(const HeckeElement& h) {
  BarCache cache(h.rank());
  return bar_involution(h, cache);
}

bool is_bar_invariant(const HeckeElement& h, BarCache& cache) {
  return bar_involution(h, cache) == h;
}

bool is_bar_invariant(const HeckeElement& h) {
  BarCache cache(h.rank());
  return is_bar_invariant(h, cache);
}

std::map<Permutation, LaurentPoly> mask_defect_table(
    const ClusterDecomposition& d, MaskFilter filter, Execution exec) {
  detail::MaskSweep sweep(d.word, filter == MaskFilter::ten_star_avoiding
                                      ? ten_star_starts(d)
                                      : std::vector<int>{});
  const int k = sweep.len();
  const std::uint64_t total = 1ull << k;
  std::map<Permutation, LaurentPoly> table;

  auto accumulate = [&sweep](std::map<Permutation, LaurentPoly>& acc,
                             std::uint64_t lo, std::uint64_t hi,
                             std::vector<int>& state) {
    for (std::uint64_t c = lo; c < hi; ++c) {
      if (!sweep.admits(static_cast<std::uint32_t>(c))) continue;
      auto out = sweep.run(static_cast<std::uint32_t>(c), state.data());
      Permutation x(std::vector<int>(state.begin(), state.end()));
      acc[x].add_term(2 * out.defects, 1);
    }
  };

  if (exec == Execution::serial || thread_count() == 1) {
    std::vector<int> state(sweep.rank);
    accumulate(table, 0, total, state);
    return table;
  }
#ifdef _OPENMP
  const int nt = thread_count();
  std::vector<std::map<Permutation, LaurentPoly>> parts(nt);
#pragma omp parallel num_threads(nt)
  {
    std::vector<int> state(sweep.rank);
#pragma omp for schedule(static)
    for (int t = 0; t < nt; ++t) {
      std::uint64_t lo = total * t / nt;
      std::uint64_t hi = total * (t + 1) / nt;
      accumulate(parts[t], lo, hi, state);
    }
  }
  for (const auto& part : parts)
    for (const auto& [x, p] : part) {
      auto [it, fresh] = table.try_emplace(x, p);
      if (!fresh) it->second += p;
    }
  return table;
#else
  std::vector<int> state(sweep.rank);
  accumulate(table, 0, total, state);
  return table;
#endif
}

HeckeElement h_of_masks(const ClusterDecomposition& d, MaskFilter filter,
                        Execution exec) {
  HeckeElement out(d.word.rank);
  for (const auto& [x, p] : mask_defect_table(d, filter, exec))
    out.add(x, p.shifted(-d.word.size()));
  return out;
}

HeckeElement h_of_masks(const ClusterDecomposition& d,
                        const std::vector<Mask>& masks) {
  HeckeElement out(d.word.rank);
  for (const auto& m : masks) {
    MaskStats stats = defect_stats(d.word, m);
    out.add(subword_eval(d.word, m),
            LaurentPoly::v_power(2 * stats.d - d.word.size()));
  }
  return out;
}

HeckeElement cprime(const Permutation& w, Execution exec) {
  if (!classify(w).mc_hexagon_avoiding)
    fail(errc::not_mc_hexagon_avoiding,
         to_string(w) + " is not maximally clustered and hexagon-avoiding");
  return h_of_masks(contract(w), MaskFilter::ten_star_avoiding, exec);
}

HeckeElement cprime_letter_product(const Word& w) {
  HeckeElement acc = HeckeElement::t_one(w.rank);
  for (int a : w.letters) {
    HeckeElement next = acc;
    next += t_multiply_right(acc, a);
    acc = next.shifted(-1);  // C'_s = v^{-1}(T_1 + T_s)
  }
  return acc;
}

}  // namespace ckl
