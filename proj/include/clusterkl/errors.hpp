#pragma once

#include <stdexcept>
#include <string>

namespace ckl {

enum class errc {
  invalid_permutation,
  rank_mismatch,
  letter_out_of_range,
  not_reduced,
  cap_exceeded,
  mask_length_mismatch,
  not_maximally_clustered,
  not_a_braid_cluster,
  no_clusters,
  no_ten_star_instance,
  not_mc_hexagon_avoiding,
  length_cap_exceeded,
  rank_cap_exceeded,
  not_in_class,
};

// Stable machine-readable name, e.g. "RankMismatch".  The CLI prints these
// verbatim in its json error objects.
const char* errc_name(errc c);

class domain_error : public std::runtime_error {
 public:
  domain_error(errc c, const std::string& what)
      : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw domain_error(c, what);
}

}  // namespace ckl
