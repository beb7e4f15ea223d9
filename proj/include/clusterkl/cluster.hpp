#pragma once

#include <array>
#include <vector>

#include "clusterkl/words.hpp"

namespace ckl {

// Canonical braid cluster s_{m+1} .. s_{m+k} s_{m+k+1} s_{m+k} .. s_{m+1},
// length 2k+1; its central braid is the middle three letters.
struct BraidCluster {
  int m = 0;
  int k = 1;

  std::vector<int> letters() const;
  friend bool operator==(const BraidCluster&, const BraidCluster&) = default;
};

// Location of one canonical cluster inside a contracted word.
struct ClusterSpan {
  int start = 0;  // 0-based index of the first cluster letter
  int m = 0;
  int k = 1;

  int length() const { return 2 * k + 1; }
  // Central braid positions (p, p+1, p+2), 0-based.
  std::array<int, 3> central() const {
    return {start + k - 1, start + k, start + k + 1};
  }
  friend bool operator==(const ClusterSpan&, const ClusterSpan&) = default;
};

// A contracted reduced expression a_0 c_1 a_1 ... c_M a_M: the clusters are
// canonical braid clusters whose half-lengths sum to N(w), the fillers are
// short-braid avoiding, and cluster generators appear nowhere else.
struct ClusterDecomposition {
  Word word;
  std::vector<ClusterSpan> clusters;  // in word order, disjoint

  int cluster_count() const { return static_cast<int>(clusters.size()); }
  std::vector<std::array<int, 3>> central_positions() const;
  // M+1 filler ranges [begin, end), 0-based, possibly empty.
  std::vector<std::pair<int, int>> filler_segments() const;
  friend bool operator==(const ClusterDecomposition&,
                         const ClusterDecomposition&) = default;
};

// Contracted expression built by length-decreasing moves on the 1-line
// notation; requires classify(w).maximally_clustered.
ClusterDecomposition contract(const Permutation& w);

// Canonical form of a braid cluster word (NotABraidCluster otherwise).
BraidCluster canonicalize_cluster(const Word& w);

struct DecompositionCheck {
  bool ok = true;
  std::vector<std::string> reasons;
};

DecompositionCheck verify_decomposition(const ClusterDecomposition& d);

// Removes the final k letters of the last cluster; the surviving ascending
// half joins the filler.  Requires at least one cluster.
ClusterDecomposition truncate_last_cluster(const ClusterDecomposition& d);

}  // namespace ckl
