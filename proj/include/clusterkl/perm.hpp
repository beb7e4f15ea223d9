#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "clusterkl/errors.hpp"

namespace ckl {

// Pattern search is plain subset enumeration; keep it at desk scale.
inline constexpr int kPatternRankCap = 12;

// A permutation of {1..n} in 1-line notation: w maps position i to w(i).
// Positions and values are 1-based throughout.
class Permutation {
 public:
  Permutation() : line_{1} {}
  explicit Permutation(std::vector<int> oneline);
  static Permutation identity(int n);

  int rank() const { return static_cast<int>(line_.size()); }
  int operator()(int i) const { return line_[i - 1]; }
  const std::vector<int>& oneline() const { return line_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.line_ == b.line_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (a.line_.size() != b.line_.size())
      return a.line_.size() <=> b.line_.size();
    return a.line_ <=> b.line_;
  }

 private:
  std::vector<int> line_;
};

// (u*v)(i) = u(v(i)); with this convention right multiplication by s_i
// swaps 1-line positions i and i+1.
Permutation compose(const Permutation& u, const Permutation& v);
Permutation right_multiply(const Permutation& w, int i);

// Coxeter length = inversion count.
int length(const Permutation& w);

bool is_right_descent(const Permutation& w, int i);
std::vector<int> right_descents(const Permutation& w);

struct PatternInstance {
  std::vector<int> positions;  // strictly increasing, 1-based
};

// Lexicographically least witness, or nullopt when w avoids p.
std::optional<PatternInstance> contains_pattern(const Permutation& w,
                                                const Permutation& p);

// Number of strictly decreasing triples of 1-line entries, N(w).
int count_321(const Permutation& w);

struct Classification {
  bool fully_commutative = false;
  bool freely_braided = false;
  bool maximally_clustered = false;
  bool hexagon_pattern_free = false;  // avoids the four rank-8 patterns
  bool mc_hexagon_avoiding = false;
  int n321 = 0;
};

Classification classify(const Permutation& w);

// Forbidden 1-line patterns: {3421, 4312, 4321} for maximally-clustered,
// plus 4231 for freely-braided, and the four rank-8 hexagon patterns.
const std::vector<Permutation>& mc_patterns();
const std::vector<Permutation>& fb_patterns();
const std::vector<Permutation>& hexagon_patterns();
const Permutation& hexagon_element();  // [4,6,7,1,8,2,3,5]

std::string to_string(const Permutation& w);

// Accepts "3,4,1,2" always and compact "3412" for n <= 9.
Permutation parse_permutation(const std::string& text);

}  // namespace ckl
