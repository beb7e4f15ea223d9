#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "clusterkl/cluster.hpp"
#include "clusterkl/parallel.hpp"

namespace ckl {

// Full mask enumerations are capped at 2^24.
inline constexpr int kMaskLengthCap = 24;

// A binary vector bound (by use) to a reduced word of the same length.
struct Mask {
  std::vector<std::uint8_t> bits;

  int size() const { return static_cast<int>(bits.size()); }
  bool proper() const;  // not all ones
  friend bool operator==(const Mask&, const Mask&) = default;
};

std::string to_string(const Mask& m);  // bit string, e.g. "10010"
Mask parse_mask(const std::string& text);

// Product of the letters with bit 1.
Permutation subword_eval(const Word& w, const Mask& m);

struct MaskStats {
  std::vector<int> defect_positions;  // 1-based
  int zero_defects = 0;
  int plain_zeros = 0;
  int d = 0;  // total defects, independent of the bits at those positions
};

MaskStats defect_stats(const Word& w, const Mask& m);

// 0-based start positions of the central braids, where a 10*-instance means
// bits (1,0) on the first two central letters.
std::vector<int> ten_star_starts(const ClusterDecomposition& d);
std::vector<int> ten_star_sites(const ClusterDecomposition& d, const Mask& m);
bool is_10star_avoiding(const ClusterDecomposition& d, const Mask& m);

enum class MaskFilter { all, ten_star_avoiding };

// Streams masks in binary-counter order with position 1 most significant.
void enumerate_masks(const ClusterDecomposition& d, MaskFilter filter,
                     const std::function<void(const Mask&)>& fn);
std::uint64_t mask_count(const ClusterDecomposition& d, MaskFilter filter);

// Deodhar bound for proper masks: zero-defects strictly fewer than
// plain-zeros.  The full mask is exempt.
bool deodhar_bound_holds(const MaskStats& stats, bool proper);

// True iff every proper mask in the (optionally 10*-filtered) mask set of
// the word satisfies the Deodhar bound.
bool all_proper_masks_bounded(const Word& w,
                              const std::vector<int>& ten_star_starts,
                              Execution exec = Execution::parallel);

// Every proper mask on some_reduced_word(w) bounded; length capped at 24.
bool is_deodhar_element(const Permutation& w,
                        Execution exec = Execution::parallel);

struct PhiTrace {
  int span_index = 0;     // cluster index in the collapsed decomposition
  bool span_erased = false;
  int t = 0;              // half-length of the collapsed segment
  int pos = 0;            // 0-based position of the collapsed letter
};

// Collapses the maximal symmetric mask-value-1 segment around the rightmost
// 10*-instance to a single letter with flipped terminal bit.  Preserves the
// evaluated permutation and removes exactly t defects.
std::pair<ClusterDecomposition, Mask> phi_collapse(const ClusterDecomposition& d,
                                                   const Mask& m);
std::pair<ClusterDecomposition, Mask> phi_collapse_traced(
    const ClusterDecomposition& d, const Mask& m, PhiTrace* trace);

// Inverse rewrite; phi_expand(phi_collapse_traced(d, m)) recovers (d, m).
std::pair<ClusterDecomposition, Mask> phi_expand(const ClusterDecomposition& d,
                                                 const Mask& m,
                                                 const PhiTrace& trace);

namespace detail {

// Packed-counter sweep shared by the Deodhar checks and the Hecke/KL mask
// accumulations.  Bit j of a counter c (0-based position) is
// (c >> (len-1-j)) & 1, so ascending counters enumerate bit strings in
// lexicographic order.
struct MaskSweep {
  std::vector<int> letters;
  int rank = 1;
  std::vector<int> stars;  // 0-based 10*-start positions to filter on

  explicit MaskSweep(const Word& w, std::vector<int> star_positions = {});

  int len() const { return static_cast<int>(letters.size()); }
  bool admits(std::uint32_t c) const;  // 10*-avoiding
  struct Out {
    int defects = 0;
    int zero_defects = 0;
    int plain_zeros = 0;
  };
  // `state` must have room for `rank` ints; on return it holds the 1-line
  // notation of the subword product.
  Out run(std::uint32_t c, int* state) const;
};

}  // namespace detail

}  // namespace ckl
