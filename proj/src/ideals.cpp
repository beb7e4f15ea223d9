#include "clusterkl/ideals.hpp"

#include <algorithm>
#include <set>

#include "clusterkl/census.hpp"

namespace ckl {

PatternClass PatternClass::mc() { return {"mc", mc_patterns()}; }
PatternClass PatternClass::fb() { return {"fb", fb_patterns()}; }
PatternClass PatternClass::all() { return {"all", {}}; }

PatternClass PatternClass::by_name(const std::string& name) {
  if (name == "mc") return mc();
  if (name == "fb") return fb();
  if (name == "all") return all();
  fail(errc::not_in_class, "unknown pattern class: " + name);
}

bool PatternClass::contains(const Permutation& w) const {
  for (const auto& p : patterns)
    if (contains_pattern(w, p)) return false;
  return true;
}

namespace {

void check_rank_cap(int r, const char* what) {
  if (r > kIdealRankCap)
    fail(errc::rank_cap_exceeded, std::string(what) + " capped at rank " +
                                      std::to_string(kIdealRankCap));
}

// Parallel filter over S_n in lexicographic order; pred must be pure.
std::vector<Permutation> filter_sn(int n, Execution exec,
                                   const std::function<bool(const Permutation&)>& pred) {
  std::vector<Permutation> out;
  if (exec == Execution::serial || thread_count() == 1) {
    for_each_permutation(n, [&](const Permutation& w) {
      if (pred(w)) out.push_back(w);
    });
    return out;
  }
#ifdef _OPENMP
  const std::uint64_t total = factorial(n);
  const int nt = thread_count();
  std::vector<std::vector<Permutation>> parts(nt);
#pragma omp parallel for schedule(static) num_threads(nt)
  for (int t = 0; t < nt; ++t) {
    std::uint64_t lo = total * t / nt;
    std::uint64_t hi = total * (t + 1) / nt;
    if (lo >= hi) continue;
    std::vector<int> line = nth_permutation(n, lo).oneline();
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Permutation w(line);
      if (pred(w)) parts[t].push_back(w);
      std::next_permutation(line.begin(), line.end());
    }
  }
  for (auto& part : parts)
    for (auto& w : part) out.push_back(std::move(w));
  return out;
#else
  for_each_permutation(n, [&](const Permutation& w) {
    if (pred(w)) out.push_back(w);
  });
  return out;
#endif
}

}  // namespace

UpperSet upper_set(const Permutation& h, const PatternClass& cls, int cap,
                   Execution exec) {
  check_rank_cap(h.rank(), "upper_set");
  UpperSet out{h, cls, {}};
  out.members = filter_sn(h.rank(), exec, [&](const Permutation& w) {
    return cls.contains(w) && heap_contains(w, h, cap);
  });
  return out;
}

std::vector<Permutation> one_point_extensions(const Permutation& p) {
  const int r = p.rank();
  std::set<Permutation> seen;
  for (int pos = 1; pos <= r + 1; ++pos)
    for (int val = 1; val <= r + 1; ++val) {
      std::vector<int> line;
      line.reserve(r + 1);
      for (int i = 1; i <= r; ++i) {
        if (i == pos) line.push_back(val);
        line.push_back(p(i) >= val ? p(i) + 1 : p(i));
      }
      if (pos == r + 1) line.push_back(val);
      seen.insert(Permutation(std::move(line)));
    }
  return {seen.begin(), seen.end()};
}

bool is_ideal_pattern(const Permutation& p, const PatternClass& cls, int cap) {
  if (!cls.contains(p))
    fail(errc::not_in_class,
         to_string(p) + " is not in class " + cls.name);
  check_rank_cap(p.rank(), "is_ideal_pattern");
  for (const Permutation& q : one_point_extensions(p)) {
    if (!cls.contains(q)) continue;
    if (!heap_contains(q, p, cap)) return false;
  }
  return true;
}

CharacterizationReport characterization_check(const PatternClass& cls,
                                              const std::vector<Permutation>& H,
                                              int n, int cap, Execution exec) {
  check_rank_cap(n, "characterization_check");
  std::vector<Permutation> extra;  // P' = union of the upper sets
  for (const Permutation& h : H) {
    UpperSet u = upper_set(h, cls, cap, exec);
    extra.insert(extra.end(), u.members.begin(), u.members.end());
  }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());

  CharacterizationReport report;
  std::vector<Permutation> members = filter_sn(n, exec, [&](const Permutation& w) {
    return cls.contains(w);
  });
  report.class_size = static_cast<long>(members.size());

  // Heap-avoidance side is the expensive direct search; parallel over members.
  std::vector<char> heap_avoids(members.size(), 0);
  const auto body = [&](std::size_t i) {
    const Permutation& w = members[i];
    for (const Permutation& h : H)
      if (heap_contains(w, h, cap)) return;
    heap_avoids[i] = 1;
  };
  if (exec == Execution::serial || thread_count() == 1) {
    for (std::size_t i = 0; i < members.size(); ++i) body(i);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(members.size()); ++i)
      body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < members.size(); ++i) body(i);
#endif
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    const Permutation& w = members[i];
    bool pattern_avoids = true;
    for (const Permutation& p : extra)
      if (contains_pattern(w, p)) {
        pattern_avoids = false;
        break;
      }
    if (heap_avoids[i]) ++report.heap_avoiders;
    if (pattern_avoids) ++report.pattern_avoiders;
    if (heap_avoids[i] && !pattern_avoids) report.heap_only.push_back(w);
    if (pattern_avoids && !heap_avoids[i]) report.pattern_only.push_back(w);
  }
  report.equal = report.heap_only.empty() && report.pattern_only.empty();
  return report;
}

}  // namespace ckl
