#pragma once

#include <cstdint>
#include <optional>

#include "clusterkl/hecke.hpp"

namespace ckl {

inline constexpr int kRecursionLengthCap = 20;

enum class KLMethod { masks, recursion };

struct KLTable {
  Permutation w;
  KLMethod method = KLMethod::masks;
  // Rows for every x <= w, sorted by (length, 1-line lex); polynomials in q.
  std::vector<std::pair<Permutation, LaurentPoly>> rows;

  const LaurentPoly* find(const Permutation& x) const;
};

// Classical Kazhdan-Lusztig recursion, memoized per rank: C'_w is computed
// as C'_{ws} C'_s minus mu-coefficient corrections.  Independent of the
// mask enumeration path.
class KLOracle {
 public:
  const HeckeElement& cprime(const Permutation& w);
  LaurentPoly p(const Permutation& x, const Permutation& w);

 private:
  std::map<Permutation, HeckeElement> memo_;
};

// P_{x,w} as the defect generating function over the 10*-avoiding masks on
// contract(w); requires w maximally clustered and hexagon-pattern-free.
LaurentPoly kl_masks(const Permutation& x, const Permutation& w,
                     Execution exec = Execution::parallel);

LaurentPoly kl_recursion(const Permutation& x, const Permutation& w);

KLTable kl_table(const Permutation& w, KLMethod method,
                 Execution exec = Execution::parallel);
KLTable kl_table(const Permutation& w, KLMethod method, KLOracle& oracle,
                 Execution exec);

struct KLVerifyReport {
  Permutation w;
  bool ok = true;
  long pairs = 0;
  std::vector<std::string> mismatches;
};

// Exact equality of both methods on every row, plus degree-bound,
// nonnegativity and constant-term checks.
KLVerifyReport verify(const Permutation& w);
KLVerifyReport verify(const Permutation& w, KLOracle& oracle, Execution exec);

struct SweepReport {
  int n = 0;
  long elements = 0;
  long long pairs = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Runs verify() over every maximally-clustered hexagon-pattern-free element
// of S_n, or over `sample` seeded-random such elements.
SweepReport verify_theorem_sweep(int n, std::optional<int> sample,
                                 std::uint64_t seed,
                                 Execution exec = Execution::parallel);

std::vector<Permutation> sample_mc_hexagon_avoiding(int n, int count,
                                                    std::uint64_t seed);

}  // namespace ckl
