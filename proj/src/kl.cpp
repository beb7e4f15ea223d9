#include "clusterkl/kl.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "clusterkl/census.hpp"

namespace ckl {

const LaurentPoly* KLTable::find(const Permutation& x) const {
  for (const auto& [y, p] : rows)
    if (y == x) return &p;
  return nullptr;
}

namespace {

void check_recursion_cap(const Permutation& w) {
  if (length(w) > kRecursionLengthCap)
    fail(errc::cap_exceeded, "recursion capped at length " +
                                 std::to_string(kRecursionLengthCap));
}

std::vector<std::pair<Permutation, LaurentPoly>> sorted_rows(
    std::map<Permutation, LaurentPoly> table) {
  std::vector<std::pair<Permutation, LaurentPoly>> rows(
      std::make_move_iterator(table.begin()), std::make_move_iterator(table.end()));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) {
                     int la = length(a.first), lb = length(b.first);
                     if (la != lb) return la < lb;
                     return a.first < b.first;
                   });
  return rows;
}

}  // namespace

const HeckeElement& KLOracle::cprime(const Permutation& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (w.is_identity())
    return memo_.emplace(w, HeckeElement::t_one(w.rank())).first->second;

  int s = right_descents(w).front();
  Permutation v = right_multiply(w, s);
  const int lv = length(v);

  // C'_v C'_s = C'_w + sum_{zs < z} mu(z, v) C'_z; mu(z, v) is the
  // coefficient of v^{-l(z)-1} in the T_z coordinate of C'_v.
  const HeckeElement& cv = cprime(v);
  HeckeElement acc = cv;
  acc += t_multiply_right(cv, s);
  acc = acc.shifted(-1);

  std::vector<std::pair<Permutation, long long>> corrections;
  for (const auto& [z, poly] : cv.terms()) {
    if (length(z) >= lv) continue;
    if (!is_right_descent(z, s)) continue;
    long long mu = poly.coeff(-length(z) - 1);
    if (mu != 0) corrections.emplace_back(z, mu);
  }
  for (const auto& [z, mu] : corrections) {
    acc -= cprime(z).scaled(LaurentPoly::constant(mu));
  }
  return memo_.emplace(w, std::move(acc)).first->second;
}

LaurentPoly KLOracle::p(const Permutation& x, const Permutation& w) {
  if (x.rank() != w.rank()) fail(errc::rank_mismatch, "p: ranks differ");
  check_recursion_cap(w);
  return cprime(w).coeff(x).shifted(length(w));
}

LaurentPoly kl_masks(const Permutation& x, const Permutation& w,
                     Execution exec) {
  if (x.rank() != w.rank()) fail(errc::rank_mismatch, "kl_masks: ranks differ");
  if (!classify(w).mc_hexagon_avoiding)
    fail(errc::not_mc_hexagon_avoiding,
         to_string(w) + " is not maximally clustered and hexagon-avoiding");
  auto table = mask_defect_table(contract(w), MaskFilter::ten_star_avoiding, exec);
  auto it = table.find(x);
  return it == table.end() ? LaurentPoly() : it->second;
}

LaurentPoly kl_recursion(const Permutation& x, const Permutation& w) {
  KLOracle oracle;
  return oracle.p(x, w);
}

KLTable kl_table(const Permutation& w, KLMethod method, KLOracle& oracle,
                 Execution exec) {
  KLTable out;
  out.w = w;
  out.method = method;
  if (method == KLMethod::masks) {
    if (!classify(w).mc_hexagon_avoiding)
      fail(errc::not_mc_hexagon_avoiding,
           to_string(w) + " is not maximally clustered and hexagon-avoiding");
    out.rows = sorted_rows(
        mask_defect_table(contract(w), MaskFilter::ten_star_avoiding, exec));
    return out;
  }
  check_recursion_cap(w);
  const HeckeElement& c = oracle.cprime(w);
  std::map<Permutation, LaurentPoly> table;
  for (const auto& [x, poly] : c.terms()) table[x] = poly.shifted(length(w));
  out.rows = sorted_rows(std::move(table));
  return out;
}

KLTable kl_table(const Permutation& w, KLMethod method, Execution exec) {
  KLOracle oracle;
  return kl_table(w, method, oracle, exec);
}

KLVerifyReport verify(const Permutation& w, KLOracle& oracle, Execution exec) {
  KLVerifyReport report;
  report.w = w;
  auto note = [&](const std::string& msg) {
    report.ok = false;
    report.mismatches.push_back(to_string(w) + ": " + msg);
  };

  KLTable masks = kl_table(w, KLMethod::masks, oracle, exec);
  KLTable rec = kl_table(w, KLMethod::recursion, oracle, exec);
  if (masks.rows.size() != rec.rows.size())
    note("row counts differ: " + std::to_string(masks.rows.size()) + " vs " +
         std::to_string(rec.rows.size()));

  const int lw = length(w);
  for (const auto& [x, p] : masks.rows) {
    ++report.pairs;
    const LaurentPoly* q = rec.find(x);
    if (!q) {
      note("row " + to_string(x) + " missing from recursion table");
      continue;
    }
    if (!(p == *q))
      note("P mismatch at x = " + to_string(x) + ": " + p.str() + " vs " +
           q->str());
    if (!p.only_even_exponents() || !p.nonnegative() || p.coeff(0) != 1)
      note("row " + to_string(x) + " is not a monic-at-1 polynomial in q: " +
           p.str());
    if (x == w) {
      if (!(p == LaurentPoly::constant(1))) note("P_{w,w} != 1");
    } else if (!p.is_zero() && p.max_exp() > lw - length(x) - 1) {
      note("degree bound violated at x = " + to_string(x));
    }
  }
  for (const auto& [x, q] : rec.rows)
    if (!masks.find(x)) note("row " + to_string(x) + " missing from mask table");
  return report;
}

KLVerifyReport verify(const Permutation& w) {
  KLOracle oracle;
  return verify(w, oracle, Execution::parallel);
}

std::vector<Permutation> sample_mc_hexagon_avoiding(int n, int count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> line(n);
  std::set<Permutation> chosen;
  std::vector<Permutation> out;
  while (static_cast<int>(out.size()) < count) {
    for (int i = 0; i < n; ++i) line[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(line[i], line[j]);
    }
    Permutation w(line);
    if (!classify(w).mc_hexagon_avoiding) continue;
    if (chosen.insert(w).second) out.push_back(w);
  }
  return out;
}

SweepReport verify_theorem_sweep(int n, std::optional<int> sample,
                                 std::uint64_t seed, Execution exec) {
  SweepReport report;
  report.n = n;
  std::vector<Permutation> targets;
  if (sample) {
    targets = sample_mc_hexagon_avoiding(n, *sample, seed);
  } else {
    for_each_permutation(n, [&](const Permutation& w) {
      if (classify(w).mc_hexagon_avoiding) targets.push_back(w);
    });
  }
  // The recursion memo is shared across the whole sweep; parallelism lives
  // inside the per-element mask summation.
  KLOracle oracle;
  for (const Permutation& w : targets) {
    ++report.elements;
    KLVerifyReport r = verify(w, oracle, exec);
    report.pairs += r.pairs;
    for (auto& msg : r.mismatches) report.failures.push_back(std::move(msg));
  }
  return report;
}

}  // namespace ckl
