#include "clusterkl/errors.hpp"

namespace ckl {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_permutation: return "InvalidPermutation";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::letter_out_of_range: return "LetterOutOfRange";
    case errc::not_reduced: return "NotReduced";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::mask_length_mismatch: return "MaskLengthMismatch";
    case errc::not_maximally_clustered: return "NotMaximallyClustered";
    case errc::not_a_braid_cluster: return "NotABraidCluster";
    case errc::no_clusters: return "NoClusters";
    case errc::no_ten_star_instance: return "No10StarInstance";
    case errc::not_mc_hexagon_avoiding: return "NotMCHexagonAvoiding";
    case errc::length_cap_exceeded: return "LengthCapExceeded";
    case errc::rank_cap_exceeded: return "RankCapExceeded";
    case errc::not_in_class: return "NotInClass";
  }
  return "UnknownError";
}

}  // namespace ckl
