#include "clusterkl/mask.hpp"

#include <algorithm>
#include <string>

namespace ckl {

bool Mask::proper() const {
  for (auto b : bits)
    if (!b) return true;
  return false;
}

std::string to_string(const Mask& m) {
  std::string s(m.bits.size(), '0');
  for (std::size_t i = 0; i < m.bits.size(); ++i)
    if (m.bits[i]) s[i] = '1';
  return s;
}

Mask parse_mask(const std::string& text) {
  Mask m;
  m.bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1')
      fail(errc::mask_length_mismatch,
           "bad mask character at position " + std::to_string(i + 1));
    m.bits.push_back(c == '1');
  }
  return m;
}

namespace {

void check_length(const Word& w, const Mask& m) {
  if (w.size() != m.size())
    fail(errc::mask_length_mismatch,
         "mask length " + std::to_string(m.size()) + " vs word length " +
             std::to_string(w.size()));
}

}  // namespace

Permutation subword_eval(const Word& w, const Mask& m) {
  check_length(w, m);
  std::vector<int> line(w.rank);
  for (int i = 0; i < w.rank; ++i) line[i] = i + 1;
  for (int j = 0; j < w.size(); ++j)
    if (m.bits[j]) {
      int i = w.letters[j];
      std::swap(line[i - 1], line[i]);
    }
  return Permutation(std::move(line));
}

MaskStats defect_stats(const Word& w, const Mask& m) {
  check_length(w, m);
  MaskStats stats;
  std::vector<int> line(w.rank);
  for (int i = 0; i < w.rank; ++i) line[i] = i + 1;
  for (int j = 0; j < w.size(); ++j) {
    int i = w.letters[j];
    bool defect = line[i - 1] > line[i];
    if (defect) {
      stats.defect_positions.push_back(j + 1);
      ++stats.d;
      if (!m.bits[j]) ++stats.zero_defects;
    } else if (!m.bits[j]) {
      ++stats.plain_zeros;
    }
    if (m.bits[j]) std::swap(line[i - 1], line[i]);
  }
  return stats;
}

std::vector<int> ten_star_starts(const ClusterDecomposition& d) {
  std::vector<int> out;
  out.reserve(d.clusters.size());
  for (const auto& c : d.clusters) out.push_back(c.central()[0]);
  return out;
}

std::vector<int> ten_star_sites(const ClusterDecomposition& d, const Mask& m) {
  check_length(d.word, m);
  std::vector<int> out;
  for (int p : ten_star_starts(d))
    if (m.bits[p] == 1 && m.bits[p + 1] == 0) out.push_back(p);
  return out;
}

bool is_10star_avoiding(const ClusterDecomposition& d, const Mask& m) {
  return ten_star_sites(d, m).empty();
}

namespace detail {

MaskSweep::MaskSweep(const Word& w, std::vector<int> star_positions)
    : letters(w.letters), rank(w.rank), stars(std::move(star_positions)) {
  if (len() > kMaskLengthCap)
    fail(errc::length_cap_exceeded,
         "mask enumeration capped at length " + std::to_string(kMaskLengthCap));
}

bool MaskSweep::admits(std::uint32_t c) const {
  const int k = len();
  for (int p : stars) {
    std::uint32_t two = (c >> (k - 2 - p)) & 3u;  // bits at positions p, p+1
    if (two == 2u) return false;                  // (1,0)
  }
  return true;
}

MaskSweep::Out MaskSweep::run(std::uint32_t c, int* state) const {
  const int k = len();
  for (int i = 0; i < rank; ++i) state[i] = i + 1;
  Out out;
  for (int j = 0; j < k; ++j) {
    int i = letters[j] - 1;
    bool bit = (c >> (k - 1 - j)) & 1u;
    if (state[i] > state[i + 1]) {
      ++out.defects;
      if (!bit) ++out.zero_defects;
    } else if (!bit) {
      ++out.plain_zeros;
    }
    if (bit) std::swap(state[i], state[i + 1]);
  }
  return out;
}

}  // namespace detail

void enumerate_masks(const ClusterDecomposition& d, MaskFilter filter,
                     const std::function<void(const Mask&)>& fn) {
  detail::MaskSweep sweep(d.word, filter == MaskFilter::ten_star_avoiding
                                      ? ten_star_starts(d)
                                      : std::vector<int>{});
  const int k = sweep.len();
  const std::uint64_t total = 1ull << k;
  Mask m;
  m.bits.assign(k, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    if (!sweep.admits(static_cast<std::uint32_t>(c))) continue;
    for (int j = 0; j < k; ++j) m.bits[j] = (c >> (k - 1 - j)) & 1u;
    fn(m);
  }
}

std::uint64_t mask_count(const ClusterDecomposition& d, MaskFilter filter) {
  std::uint64_t n = 0;
  enumerate_masks(d, filter, [&](const Mask&) { ++n; });
  return n;
}

bool deodhar_bound_holds(const MaskStats& stats, bool proper) {
  if (!proper) return true;
  return stats.zero_defects < stats.plain_zeros;
}

bool all_proper_masks_bounded(const Word& w, const std::vector<int>& stars,
                              Execution exec) {
  detail::MaskSweep sweep(w, stars);
  const int k = sweep.len();
  const std::uint64_t total = 1ull << k;
  const std::uint64_t full = total - 1;  // all-ones mask is exempt
  bool ok = true;
  if (exec == Execution::serial) {
    std::vector<int> state(sweep.rank);
    for (std::uint64_t c = 0; c < total && ok; ++c) {
      if (c == full || !sweep.admits(static_cast<std::uint32_t>(c))) continue;
      auto out = sweep.run(static_cast<std::uint32_t>(c), state.data());
      if (out.zero_defects >= out.plain_zeros) ok = false;
    }
    return ok;
  }
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<int> state(sweep.rank);
    bool local_ok = true;
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(total); ++c) {
      if (!local_ok || !ok) continue;
      auto uc = static_cast<std::uint64_t>(c);
      if (uc == full || !sweep.admits(static_cast<std::uint32_t>(uc))) continue;
      auto out = sweep.run(static_cast<std::uint32_t>(uc), state.data());
      if (out.zero_defects >= out.plain_zeros) local_ok = false;
    }
    if (!local_ok) {
#pragma omp critical
      ok = false;
    }
  }
  return ok;
#else
  return all_proper_masks_bounded(w, stars, Execution::serial);
#endif
}

bool is_deodhar_element(const Permutation& w, Execution exec) {
  Word word = some_reduced_word(w);
  return all_proper_masks_bounded(word, {}, exec);
}

std::pair<ClusterDecomposition, Mask> phi_collapse_traced(
    const ClusterDecomposition& d, const Mask& m, PhiTrace* trace) {
  auto sites = ten_star_sites(d, m);
  if (sites.empty())
    fail(errc::no_ten_star_instance, "mask has no 10*-instance");
  const int p = sites.back();
  std::size_t si = 0;
  while (d.clusters[si].central()[0] != p) ++si;
  const ClusterSpan span = d.clusters[si];
  const int apex = p + 1;

  // Maximal symmetric run of 1s about the central braid: t ones on the left,
  // t-1 on the right, with the terminal bit free.
  int t = 1;
  while (t + 1 <= span.k && m.bits[apex - (t + 1)] == 1 &&
         m.bits[apex + t] == 1)
    ++t;

  const std::uint8_t star = m.bits[apex + t];
  const int pos = apex - t;
  const int collapsed_letter = span.m + span.k + 1 - t;

  ClusterDecomposition nd;
  nd.word.rank = d.word.rank;
  Mask nm;
  nd.word.letters.assign(d.word.letters.begin(), d.word.letters.begin() + pos);
  nm.bits.assign(m.bits.begin(), m.bits.begin() + pos);
  nd.word.letters.push_back(collapsed_letter);
  nm.bits.push_back(1 - star);
  nd.word.letters.insert(nd.word.letters.end(),
                         d.word.letters.begin() + apex + t + 1,
                         d.word.letters.end());
  nm.bits.insert(nm.bits.end(), m.bits.begin() + apex + t + 1, m.bits.end());

  PhiTrace tr;
  tr.t = t;
  tr.pos = pos;
  tr.span_erased = (t == span.k);
  tr.span_index = static_cast<int>(si);
  for (std::size_t idx = 0; idx < d.clusters.size(); ++idx) {
    if (idx == si) {
      if (t < span.k) nd.clusters.push_back({span.start, span.m, span.k - t});
      continue;
    }
    ClusterSpan c = d.clusters[idx];
    if (c.start > span.start) c.start -= 2 * t;
    nd.clusters.push_back(c);
  }
  if (trace) *trace = tr;
  return {std::move(nd), std::move(nm)};
}

std::pair<ClusterDecomposition, Mask> phi_collapse(const ClusterDecomposition& d,
                                                   const Mask& m) {
  return phi_collapse_traced(d, m, nullptr);
}

std::pair<ClusterDecomposition, Mask> phi_expand(const ClusterDecomposition& d,
                                                 const Mask& m,
                                                 const PhiTrace& trace) {
  check_length(d.word, m);
  const int pos = trace.pos;
  const int t = trace.t;
  const int letter = d.word.letters[pos];
  const std::uint8_t beta = m.bits[pos];

  ClusterDecomposition nd;
  nd.word.rank = d.word.rank;
  Mask nm;
  nd.word.letters.assign(d.word.letters.begin(), d.word.letters.begin() + pos);
  nm.bits.assign(m.bits.begin(), m.bits.begin() + pos);
  for (int u = 0; u <= t; ++u) {
    nd.word.letters.push_back(letter + u);
    nm.bits.push_back(u < t ? 1 : 0);  // t ones then the apex zero
  }
  for (int u = t - 1; u >= 0; --u) {
    nd.word.letters.push_back(letter + u);
    nm.bits.push_back(u > 0 ? 1 : static_cast<std::uint8_t>(1 - beta));
  }
  nd.word.letters.insert(nd.word.letters.end(), d.word.letters.begin() + pos + 1,
                         d.word.letters.end());
  nm.bits.insert(nm.bits.end(), m.bits.begin() + pos + 1, m.bits.end());

  for (std::size_t idx = 0; idx < d.clusters.size(); ++idx) {
    ClusterSpan c = d.clusters[idx];
    if (c.start > pos) c.start += 2 * t;
    nd.clusters.push_back(c);
  }
  if (trace.span_erased) {
    ClusterSpan restored{pos, letter - 1, t};
    nd.clusters.insert(nd.clusters.begin() + trace.span_index, restored);
  } else {
    nd.clusters[trace.span_index].k += t;
  }
  return {std::move(nd), std::move(nm)};
}

}  // namespace ckl
