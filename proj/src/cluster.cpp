#include "clusterkl/cluster.hpp"

#include <algorithm>
#include <sstream>

namespace ckl {

std::vector<int> BraidCluster::letters() const {
  std::vector<int> out;
  out.reserve(2 * k + 1);
  for (int t = 1; t <= k + 1; ++t) out.push_back(m + t);
  for (int t = k; t >= 1; --t) out.push_back(m + t);
  return out;
}

std::vector<std::array<int, 3>> ClusterDecomposition::central_positions()
    const {
  std::vector<std::array<int, 3>> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) out.push_back(c.central());
  return out;
}

std::vector<std::pair<int, int>> ClusterDecomposition::filler_segments() const {
  std::vector<std::pair<int, int>> out;
  int begin = 0;
  for (const auto& c : clusters) {
    out.emplace_back(begin, c.start);
    begin = c.start + c.length();
  }
  out.emplace_back(begin, word.size());
  return out;
}

namespace {

[[noreturn]] void algorithm_broken(const std::string& what) {
  // Reaching this means the input violated an invariant the contraction
  // algorithm relies on; contract() pre-checks maximal-clusteredness, so
  // these throws are unreachable on valid input.
  throw std::logic_error("contract: " + what);
}

// Working state: 1-line notation v (1-based), the applied letter sequence,
// and the cluster blocks recorded inside it.
struct Contraction {
  std::vector<int> v;  // v[1..n]
  int n;
  std::vector<int> applied;
  struct Block {
    int begin;  // index into `applied`
    int base;   // window start position p; letters run p .. p+k .. p
    int k;
  };
  std::vector<Block> blocks;

  explicit Contraction(const Permutation& w)
      : v(w.rank() + 1), n(w.rank()) {
    for (int i = 1; i <= n; ++i) v[i] = w(i);
  }

  void apply(int pos) {
    if (v[pos] <= v[pos + 1]) algorithm_broken("length-increasing move");
    std::swap(v[pos], v[pos + 1]);
    applied.push_back(pos);
  }

  // Applies the braid cluster word s_p .. s_{p+k} s_{p+k-1} .. s_p; on the
  // window of positions p..p+k+1 this swaps the outer entries and fixes the
  // middle ones.
  void apply_cluster(int p, int k) {
    Block b{static_cast<int>(applied.size()), p, k};
    for (int t = p; t <= p + k; ++t) apply(t);
    for (int t = p + k - 1; t >= p; --t) apply(t);
    blocks.push_back(b);
  }
};

}  // namespace

ClusterDecomposition contract(const Permutation& w) {
  if (!classify(w).maximally_clustered)
    fail(errc::not_maximally_clustered,
         to_string(w) + " is not maximally clustered");

  Contraction st(w);
  auto& v = st.v;
  const int n = st.n;

  while (true) {
    // (1) leftmost middle j of a [321]-instance; once j is known to be a
    // middle, both witnesses are unique.
    int i = -1, j = -1, k = -1;
    for (int b = 2; b < n && j < 0; ++b) {
      std::vector<int> uppers, lowers;
      for (int t = 1; t < b; ++t)
        if (v[t] > v[b]) uppers.push_back(t);
      if (uppers.empty()) continue;
      for (int t = b + 1; t <= n; ++t)
        if (v[t] < v[b]) lowers.push_back(t);
      if (lowers.empty()) continue;
      if (uppers.size() > 1) algorithm_broken("middle with two upper witnesses");
      if (lowers.size() > 1) algorithm_broken("middle with two lower witnesses");
      i = uppers.front();
      j = b;
      k = lowers.front();
    }
    if (j < 0) break;

    // (2) bring i adjacent to j.
    while (i + 1 < j) {
      st.apply(i);
      ++i;
    }

    // (3) the run of values in (v[j], v[i]) sits right of j; everything from
    // h up to k exceeds v[i].
    int h = j + 1;
    while (h < k && v[h] < v[i]) ++h;
    for (int t = j + 1; t < h; ++t)
      if (t + 1 < h && v[t] > v[t + 1]) algorithm_broken("descent in run");
    for (int t = h; t < k; ++t)
      if (v[t] < v[i]) algorithm_broken("small value right of h");

    // (4) walk k down to h, undoing any cluster instance it participates in.
    while (k > h) {
      int u = k - 1;
      int a2 = -1;
      for (int t = 1; t < u; ++t)
        if (v[t] > v[u]) {
          if (a2 >= 0) algorithm_broken("step 4 middle not unique");
          a2 = t;
        }
      if (a2 < 0) {
        st.apply(k - 1);
        --k;
        continue;
      }
      // Mids of the instance (a2, ..., k): trailing block ending at k-1.
      int cnt = 0;
      for (int t = a2 + 1; t < k; ++t)
        if (v[t] < v[a2]) ++cnt;
      for (int t = k - cnt; t < k; ++t) {
        if (v[t] > v[a2]) algorithm_broken("mids not consecutive");
        if (t + 1 < k && v[t] > v[t + 1]) algorithm_broken("mids not increasing");
      }
      while (a2 + 1 < k - cnt) {
        st.apply(a2);
        ++a2;
      }
      st.apply_cluster(a2, cnt);
      k = a2;
    }

    // (5) the instance (i, j, run, k) is consecutive on [j-1, h].
    st.apply_cluster(j - 1, h - j);
  }

  // Fully commutative remainder: smallest-descent peeling, matching the
  // canonical word of module words.
  while (true) {
    int d = 0;
    for (int t = 1; t < n; ++t)
      if (v[t] > v[t + 1]) {
        d = t;
        break;
      }
    if (d == 0) break;
    st.apply(d);
  }

  // The applied sequence reduces w to the identity, so its reverse is a
  // reduced word for w; the cluster blocks stay contiguous palindromes.
  const int L = static_cast<int>(st.applied.size());
  ClusterDecomposition d;
  d.word.rank = n;
  d.word.letters.assign(st.applied.rbegin(), st.applied.rend());
  for (const auto& b : st.blocks) {
    ClusterSpan span;
    span.start = L - (b.begin + 2 * b.k + 1);
    span.m = b.base - 1;
    span.k = b.k;
    d.clusters.push_back(span);
  }
  std::sort(d.clusters.begin(), d.clusters.end(),
            [](const ClusterSpan& a, const ClusterSpan& b) {
              return a.start < b.start;
            });
  return d;
}

BraidCluster canonicalize_cluster(const Word& w) {
  const int len = w.size();
  if (len < 3 || len % 2 == 0)
    fail(errc::not_a_braid_cluster, "cluster words have odd length >= 3");
  const int k = (len - 1) / 2;
  const auto& a = w.letters;
  for (int p = 0; p < k; ++p)
    if (a[p] != a[len - 1 - p])
      fail(errc::not_a_braid_cluster, "word is not an index palindrome");
  // Each of the first k letters needs exactly one non-commuting partner
  // among the later letters of the first half plus the apex.
  for (int p = 0; p < k; ++p) {
    int partners = 0;
    for (int q = p + 1; q <= k; ++q)
      if (std::abs(a[p] - a[q]) == 1) ++partners;
    if (partners != 1)
      fail(errc::not_a_braid_cluster,
           "letter at position " + std::to_string(p + 1) +
               " lacks a unique non-commuting partner");
  }
  std::vector<int> gens(a.begin(), a.begin() + k + 1);
  std::sort(gens.begin(), gens.end());
  if (std::unique(gens.begin(), gens.end()) != gens.end())
    fail(errc::not_a_braid_cluster, "repeated generator in half word");
  if (gens.back() - gens.front() != k)
    fail(errc::not_a_braid_cluster, "generators do not form an interval");

  BraidCluster c{gens.front() - 1, k};
  Word canonical{c.letters(), w.rank};
  if (!is_reduced(w) || !(evaluate(canonical) == evaluate(w)))
    fail(errc::not_a_braid_cluster, "word does not represent a braid cluster");
  return c;
}

DecompositionCheck verify_decomposition(const ClusterDecomposition& d) {
  DecompositionCheck out;
  auto flag = [&](const std::string& reason) {
    out.ok = false;
    out.reasons.push_back(reason);
  };

  if (!is_reduced(d.word)) flag("word is not reduced");

  int prev_end = 0;
  for (std::size_t idx = 0; idx < d.clusters.size(); ++idx) {
    const auto& c = d.clusters[idx];
    std::ostringstream tag;
    tag << "cluster " << idx + 1;
    if (c.k < 1 || c.start < prev_end || c.start + c.length() > d.word.size()) {
      flag(tag.str() + ": bad span");
      continue;
    }
    prev_end = c.start + c.length();
    BraidCluster expect{c.m, c.k};
    std::vector<int> got(d.word.letters.begin() + c.start,
                         d.word.letters.begin() + c.start + c.length());
    if (got != expect.letters()) flag(tag.str() + ": not in canonical form");
  }

  // Cluster generators must not occur anywhere else in the word.
  std::vector<int> owner(d.word.rank, -1);
  for (std::size_t idx = 0; idx < d.clusters.size(); ++idx)
    for (int g = d.clusters[idx].m + 1; g <= d.clusters[idx].m + d.clusters[idx].k + 1;
         ++g)
      if (g < d.word.rank) owner[g] = static_cast<int>(idx);
  for (int pos = 0; pos < d.word.size(); ++pos) {
    int g = d.word.letters[pos];
    int own = owner[g];
    if (own < 0) continue;
    const auto& c = d.clusters[own];
    if (pos < c.start || pos >= c.start + c.length()) {
      flag("generator s_" + std::to_string(g) + " escapes its cluster");
      break;
    }
  }

  for (auto [b, e] : d.filler_segments()) {
    if (b > e || e > d.word.size()) {
      flag("filler segment out of range");
      continue;
    }
    Word filler{std::vector<int>(d.word.letters.begin() + b,
                                 d.word.letters.begin() + e),
                d.word.rank};
    if (!is_reduced(filler)) {
      flag("filler is not reduced");
      continue;
    }
    if (count_321(evaluate(filler)) != 0) flag("filler is not short-braid avoiding");
  }

  if (is_reduced(d.word)) {
    int sum = 0;
    for (const auto& c : d.clusters) sum += c.k;
    if (sum != count_321(evaluate(d.word)))
      flag("cluster half-lengths do not sum to N(w)");
  }
  return out;
}

ClusterDecomposition truncate_last_cluster(const ClusterDecomposition& d) {
  if (d.clusters.empty())
    fail(errc::no_clusters, "decomposition has no clusters");
  ClusterDecomposition out = d;
  ClusterSpan last = out.clusters.back();
  out.clusters.pop_back();
  auto first = out.word.letters.begin() + last.start + last.k + 1;
  out.word.letters.erase(first, first + last.k);
  return out;
}

}  // namespace ckl
