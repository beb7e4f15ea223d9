#include "clusterkl/perm.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ckl {

Permutation::Permutation(std::vector<int> oneline) : line_(std::move(oneline)) {
  const int n = static_cast<int>(line_.size());
  if (n < 1) fail(errc::invalid_permutation, "empty 1-line notation");
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = line_[i];
    if (v < 1 || v > n)
      fail(errc::invalid_permutation,
           "value " + std::to_string(v) + " out of range at position " +
               std::to_string(i + 1));
    if (seen[v])
      fail(errc::invalid_permutation,
           "duplicate value " + std::to_string(v) + " at position " +
               std::to_string(i + 1));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) fail(errc::invalid_permutation, "rank must be at least 1");
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  return Permutation(std::move(line));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (line_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(rank());
  for (int i = 0; i < rank(); ++i) inv[line_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank())
    fail(errc::rank_mismatch, "compose: ranks " + std::to_string(u.rank()) +
                                  " and " + std::to_string(v.rank()));
  std::vector<int> line(u.rank());
  for (int i = 1; i <= u.rank(); ++i) line[i - 1] = u(v(i));
  return Permutation(std::move(line));
}

Permutation right_multiply(const Permutation& w, int i) {
  if (i < 1 || i >= w.rank())
    fail(errc::letter_out_of_range,
         "generator s_" + std::to_string(i) + " out of range for rank " +
             std::to_string(w.rank()));
  std::vector<int> line = w.oneline();
  std::swap(line[i - 1], line[i]);
  return Permutation(std::move(line));
}

int length(const Permutation& w) {
  int inv = 0;
  const auto& line = w.oneline();
  for (std::size_t a = 0; a < line.size(); ++a)
    for (std::size_t b = a + 1; b < line.size(); ++b)
      if (line[a] > line[b]) ++inv;
  return inv;
}

bool is_right_descent(const Permutation& w, int i) {
  return w(i) > w(i + 1);
}

std::vector<int> right_descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.rank(); ++i)
    if (is_right_descent(w, i)) out.push_back(i);
  return out;
}

std::optional<PatternInstance> contains_pattern(const Permutation& w,
                                                const Permutation& p) {
  const int n = w.rank();
  const int k = p.rank();
  if (n > kPatternRankCap)
    fail(errc::rank_cap_exceeded,
         "pattern search capped at rank " + std::to_string(kPatternRankCap));
  if (k > n) return std::nullopt;

  std::vector<int> pos(k);
  // Depth-first over increasing position tuples; the first complete match is
  // the lexicographically least witness.
  std::function<bool(int, int)> dfs = [&](int depth, int start) -> bool {
    if (depth == k) return true;
    for (int cand = start; cand <= n - (k - depth) + 1; ++cand) {
      bool ok = true;
      for (int t = 0; t < depth && ok; ++t)
        ok = (w(pos[t]) < w(cand)) == (p(t + 1) < p(depth + 1));
      if (!ok) continue;
      pos[depth] = cand;
      if (dfs(depth + 1, cand + 1)) return true;
    }
    return false;
  };
  if (!dfs(0, 1)) return std::nullopt;
  return PatternInstance{pos};
}

int count_321(const Permutation& w) {
  const auto& line = w.oneline();
  const int n = w.rank();
  int count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (line[a] <= line[b]) continue;
      for (int c = b + 1; c < n; ++c)
        if (line[b] > line[c]) ++count;
    }
  return count;
}

const std::vector<Permutation>& mc_patterns() {
  static const std::vector<Permutation> p = {
      Permutation({3, 4, 2, 1}),
      Permutation({4, 3, 1, 2}),
      Permutation({4, 3, 2, 1}),
  };
  return p;
}

const std::vector<Permutation>& fb_patterns() {
  static const std::vector<Permutation> p = {
      Permutation({4, 2, 3, 1}),
      Permutation({3, 4, 2, 1}),
      Permutation({4, 3, 1, 2}),
      Permutation({4, 3, 2, 1}),
  };
  return p;
}

const std::vector<Permutation>& hexagon_patterns() {
  static const std::vector<Permutation> p = {
      Permutation({4, 6, 7, 1, 8, 2, 3, 5}),
      Permutation({4, 6, 7, 8, 1, 2, 3, 5}),
      Permutation({5, 6, 7, 1, 8, 2, 3, 4}),
      Permutation({5, 6, 7, 8, 1, 2, 3, 4}),
  };
  return p;
}

const Permutation& hexagon_element() {
  static const Permutation h({4, 6, 7, 1, 8, 2, 3, 5});
  return h;
}

namespace {

bool avoids_all(const Permutation& w, const std::vector<Permutation>& ps) {
  for (const auto& p : ps)
    if (contains_pattern(w, p)) return false;
  return true;
}

}  // namespace

Classification classify(const Permutation& w) {
  Classification c;
  c.n321 = count_321(w);
  c.fully_commutative = (c.n321 == 0);
  c.maximally_clustered = avoids_all(w, mc_patterns());
  c.freely_braided =
      c.maximally_clustered && !contains_pattern(w, Permutation({4, 2, 3, 1}));
  c.hexagon_pattern_free = avoids_all(w, hexagon_patterns());
  c.mc_hexagon_avoiding = c.maximally_clustered && c.hexagon_pattern_free;
  return c;
}

std::string to_string(const Permutation& w) {
  std::ostringstream os;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) os << ',';
    os << w(i);
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  if (text.empty()) fail(errc::invalid_permutation, "empty permutation");
  std::vector<int> line;
  if (text.find(',') == std::string::npos && text.size() > 1) {
    // Compact form, single digits only.
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch < '1' || ch > '9')
        fail(errc::invalid_permutation,
             "bad character at position " + std::to_string(i + 1));
      line.push_back(ch - '0');
    }
    if (line.size() > 9)
      fail(errc::invalid_permutation, "compact form limited to n <= 9");
  } else {
    std::istringstream is(text);
    std::string tok;
    std::size_t idx = 0;
    while (std::getline(is, tok, ',')) {
      ++idx;
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        line.push_back(v);
      } catch (const std::exception&) {
        fail(errc::invalid_permutation,
             "bad entry at position " + std::to_string(idx));
      }
    }
  }
  return Permutation(std::move(line));
}

}  // namespace ckl
