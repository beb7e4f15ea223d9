#include "clusterkl/heap.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace ckl {

namespace {

bool noncommuting(int a, int b) { return std::abs(a - b) <= 1; }

}  // namespace

Heap heap_of(const Word& w) {
  if (!is_reduced(w))
    fail(errc::not_reduced, "heap_of: word " + to_string(w) + " is not reduced");
  const int k = w.size();
  if (k > kMaxHeapEntries)
    fail(errc::cap_exceeded, "heap_of: word longer than " +
                                 std::to_string(kMaxHeapEntries));
  Heap h;
  h.word = w;
  h.level.assign(k, 0);
  h.above.assign(k, {});
  h.below.assign(k, {});
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!noncommuting(w.letters[i], w.letters[j])) continue;
      h.below[j] |= h.below[i];
      h.below[j].set(i);
      h.level[j] = std::max(h.level[j], h.level[i] + 1);
    }
  }
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (h.below[j].test(i)) h.above[i].set(j);

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!h.above[i].test(j)) continue;
      if ((h.above[i] & h.below[j]).none()) h.covers.emplace_back(i, j);
    }

  h.columns.assign(w.rank, {});
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h.level[a] < h.level[b]; });
  for (int e : order) h.columns[h.column(e)].push_back(e);
  return h;
}

Word canonical_word(const Heap& h) {
  const int k = h.size();
  Word out;
  out.rank = h.word.rank;
  EntrySet remaining;
  for (int i = 0; i < k; ++i) remaining.set(i);
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int e = 0; e < k; ++e) {
      if (!remaining.test(e)) continue;
      if ((h.below[e] & remaining).any()) continue;
      if (pick < 0 || h.column(e) < h.column(pick)) pick = e;
    }
    out.letters.push_back(h.column(pick));
    remaining.reset(pick);
  }
  return out;
}

namespace {

// Braid-applicable triples: entries x < y < z with x,z in one column, y the
// only element of the open interval (x,z).  Such a triple can be made
// consecutive in some word of the class, where it reads s_i s_j s_i.
struct BraidTriple {
  int x, y, z;
};

std::vector<BraidTriple> braid_triples(const Heap& h) {
  std::vector<BraidTriple> out;
  for (const auto& col : h.columns) {
    for (std::size_t t = 0; t + 1 < col.size(); ++t) {
      int x = col[t], z = col[t + 1];
      EntrySet mid = h.above[x] & h.below[z];
      if (mid.count() != 1) continue;
      int y = -1;
      for (int e = 0; e < h.size(); ++e)
        if (mid.test(e)) { y = e; break; }
      out.push_back({x, y, z});
    }
  }
  return out;
}

// Word for the class with the triple consecutive and the braid applied.
Word apply_braid(const Heap& h, const BraidTriple& t) {
  const int k = h.size();
  std::vector<int> pre, post;
  for (int e = 0; e < k; ++e) {
    if (e == t.x || e == t.y || e == t.z) continue;
    if (h.below[t.z].test(e))
      pre.push_back(e);
    else
      post.push_back(e);
  }
  auto bylevel = [&](int a, int b) {
    return h.level[a] != h.level[b] ? h.level[a] < h.level[b] : a < b;
  };
  std::sort(pre.begin(), pre.end(), bylevel);
  std::sort(post.begin(), post.end(), bylevel);

  Word out;
  out.rank = h.word.rank;
  for (int e : pre) out.letters.push_back(h.column(e));
  out.letters.push_back(h.column(t.y));
  out.letters.push_back(h.column(t.x));
  out.letters.push_back(h.column(t.y));
  for (int e : post) out.letters.push_back(h.column(e));
  return out;
}

}  // namespace

std::vector<Heap> commutativity_classes(const Permutation& w, int cap) {
  Word start = some_reduced_word(w);
  if (start.size() > kClassWordCap)
    fail(errc::cap_exceeded,
         "commutativity class search capped at word length " +
             std::to_string(kClassWordCap));
  std::set<std::vector<int>> seen;
  std::deque<Word> queue;
  Word c0 = canonical_word(heap_of(start));
  seen.insert(c0.letters);
  queue.push_back(c0);
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    Heap h = heap_of(cur);
    for (const auto& t : braid_triples(h)) {
      Word next = canonical_word(heap_of(apply_braid(h, t)));
      if (seen.insert(next.letters).second) {
        if (static_cast<int>(seen.size()) > cap)
          fail(errc::cap_exceeded, "more than " + std::to_string(cap) +
                                       " commutativity classes");
        queue.push_back(next);
      }
    }
  }
  std::vector<Heap> out;
  out.reserve(seen.size());
  for (const auto& letters : seen)
    out.push_back(heap_of(Word{letters, w.rank()}));
  return out;
}

namespace {

// Convex labeled embedding of hh shifted by `shift` columns into hw.  Within
// a column a convex image must occupy consecutive entries, so the search
// picks a starting offset per used column and then verifies the order
// isomorphism and convexity.
bool embeds_at_shift(const Heap& hw, const Heap& hh, int shift) {
  std::vector<int> used;  // columns of hh with entries
  for (int c = 1; c < hh.word.rank; ++c)
    if (!hh.columns[c].empty()) used.push_back(c);

  for (int c : used) {
    int target = c + shift;
    if (target >= hw.word.rank) return false;
    if (hw.columns[target].size() < hh.columns[c].size()) return false;
  }

  std::vector<int> psi(hh.size(), -1);
  std::function<bool(std::size_t)> place = [&](std::size_t ci) -> bool {
    if (ci == used.size()) {
      for (int a = 0; a < hh.size(); ++a)
        for (int b = 0; b < hh.size(); ++b)
          if (hh.above[a].test(b) != hw.above[psi[a]].test(psi[b]))
            return false;
      EntrySet image;
      for (int a = 0; a < hh.size(); ++a) image.set(psi[a]);
      for (int m = 0; m < hw.size(); ++m) {
        if (image.test(m)) continue;
        if ((hw.below[m] & image).any() && (hw.above[m] & image).any())
          return false;
      }
      return true;
    }
    int c = used[ci];
    const auto& src = hh.columns[c];
    const auto& dst = hw.columns[c + shift];
    for (std::size_t off = 0; off + src.size() <= dst.size(); ++off) {
      for (std::size_t t = 0; t < src.size(); ++t) psi[src[t]] = dst[off + t];
      if (place(ci + 1)) return true;
    }
    return false;
  };
  return place(0);
}

}  // namespace

bool heap_contains(const Permutation& w, const Permutation& h, int cap) {
  if (h.rank() > w.rank()) return false;
  std::vector<Heap> hs = commutativity_classes(h, cap);
  std::vector<Heap> ws = commutativity_classes(w, cap);
  const int maxshift = w.rank() - h.rank();
  for (const Heap& hw : ws)
    for (const Heap& hh : hs)
      for (int shift = 0; shift <= maxshift; ++shift)
        if (embeds_at_shift(hw, hh, shift)) return true;
  return false;
}

bool heap_avoids_hexagon(const Permutation& w, int cap,
                         bool pattern_fast_path) {
  if (pattern_fast_path && classify(w).maximally_clustered) {
    for (const auto& p : hexagon_patterns())
      if (contains_pattern(w, p)) return false;
    return true;
  }
  return !heap_contains(w, hexagon_element(), cap);
}

std::vector<Word> linear_extensions(const Heap& h, std::size_t cap) {
  std::vector<Word> out;
  const int k = h.size();
  EntrySet remaining;
  for (int i = 0; i < k; ++i) remaining.set(i);
  std::vector<int> acc;
  std::function<void()> rec = [&]() {
    if (out.size() >= cap) return;
    if (static_cast<int>(acc.size()) == k) {
      Word w;
      w.rank = h.word.rank;
      for (int e : acc) w.letters.push_back(h.column(e));
      out.push_back(std::move(w));
      return;
    }
    for (int e = 0; e < k; ++e) {
      if (!remaining.test(e)) continue;
      if ((h.below[e] & remaining).any()) continue;
      remaining.reset(e);
      acc.push_back(e);
      rec();
      acc.pop_back();
      remaining.set(e);
    }
  };
  rec();
  return out;
}

StringDiagram string_diagram(const Heap& h,
                             const std::vector<std::uint8_t>* mask) {
  if (mask && static_cast<int>(mask->size()) != h.size())
    fail(errc::mask_length_mismatch,
         "mask length " + std::to_string(mask->size()) + " vs " +
             std::to_string(h.size()) + " heap entries");
  StringDiagram d;
  d.rank = h.word.rank;
  std::vector<int> state(d.rank);
  for (int i = 0; i < d.rank; ++i) state[i] = i + 1;
  d.states.push_back(state);
  for (int t = 0; t < h.size(); ++t) {
    int i = h.column(t);
    d.meets.push_back({state[i - 1], state[i]});
    bool cross = !mask || (*mask)[t] != 0;
    d.crossed.push_back(cross);
    if (cross) std::swap(state[i - 1], state[i]);
    d.states.push_back(state);
  }
  d.top = Permutation(state);
  return d;
}

std::string render_ascii(const Heap& h, const std::vector<char>* marks) {
  if (h.size() == 0) return "(empty heap)\n";
  int maxlevel = *std::max_element(h.level.begin(), h.level.end());
  const int cols = h.word.rank - 1;
  std::vector<std::string> grid(maxlevel + 1, std::string(2 * cols - 1, ' '));
  for (int y = 0; y <= maxlevel; ++y)
    for (int c = 0; c < cols; ++c) grid[y][2 * c] = '.';
  for (int e = 0; e < h.size(); ++e) {
    char mark = marks ? (*marks)[e] : '*';
    grid[h.level[e]][2 * (h.column(e) - 1)] = mark;
  }
  std::ostringstream os;
  for (int y = maxlevel; y >= 0; --y) os << grid[y] << '\n';
  for (int c = 1; c <= cols; ++c) {
    if (c > 1) os << ' ';
    os << c % 10;
  }
  os << '\n';
  return os.str();
}

}  // namespace ckl
