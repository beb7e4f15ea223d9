#include "clusterkl/words.hpp"

#include <algorithm>
#include <sstream>

namespace ckl {

Permutation evaluate(const Word& w) {
  std::vector<int> line(w.rank);
  for (int i = 0; i < w.rank; ++i) line[i] = i + 1;
  for (int s : w.letters) {
    if (s < 1 || s >= w.rank)
      fail(errc::letter_out_of_range,
           "letter s_" + std::to_string(s) + " out of range for rank " +
               std::to_string(w.rank));
    std::swap(line[s - 1], line[s]);
  }
  return Permutation(std::move(line));
}

bool is_reduced(const Word& w) {
  return length(evaluate(w)) == w.size();
}

Word some_reduced_word(const Permutation& w) {
  Word out;
  out.rank = w.rank();
  Permutation cur = w;
  while (!cur.is_identity()) {
    int d = 0;
    for (int i = 1; i < cur.rank(); ++i)
      if (is_right_descent(cur, i)) {
        d = i;
        break;
      }
    out.letters.push_back(d);
    cur = right_multiply(cur, d);
  }
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

Support support(const Permutation& w) {
  Word word = some_reduced_word(w);
  std::vector<int> gens(word.letters);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Support s;
  s.generators = gens;
  s.connected = gens.empty() ||
                gens.back() - gens.front() + 1 == static_cast<int>(gens.size());
  return s;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  if (x.rank() != w.rank())
    fail(errc::rank_mismatch, "bruhat_leq: ranks differ");
  Word word = some_reduced_word(w);
  std::vector<int> v = x.oneline();
  for (int j = word.size() - 1; j >= 0; --j) {
    int i = word.letters[j];
    if (v[i - 1] > v[i]) std::swap(v[i - 1], v[i]);
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    if (i > 0) os << ',';
    os << w.letters[i];
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word out;
  if (text.empty()) {
    out.rank = 1;
    return out;
  }
  std::istringstream is(text);
  std::string tok;
  std::size_t idx = 0;
  int maxletter = 0;
  while (std::getline(is, tok, ',')) {
    ++idx;
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.letters.push_back(v);
      maxletter = std::max(maxletter, v);
    } catch (const std::exception&) {
      fail(errc::letter_out_of_range,
           "bad letter at position " + std::to_string(idx));
    }
  }
  out.rank = maxletter + 1;
  return out;
}

}  // namespace ckl
