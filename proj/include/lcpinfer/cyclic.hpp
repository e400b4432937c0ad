#pragma once

/**
 * @file cyclic.hpp
 * @brief Multisets of primitive cyclic words, the standard permutation, the
 *        BWT/IBWT bijection, and cyclic suffix and LCP arrays.
 *
 * Cyclic suffixes are the infinite periodic strings w[p] w[p+1] ... taken
 * modulo the word length. Two suffixes that agree forever have LCP omega.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lcpinfer/errors.hpp"
#include "lcpinfer/ext_nat.hpp"
#include "lcpinfer/text.hpp"

namespace lcpinfer {

namespace detail {

// Smallest period via the prefix function.
inline std::size_t smallest_period(const Text& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  return n - pi[n - 1];
}

// Start of the least rotation (two-pointer minimum expression scan).
inline std::size_t least_rotation(const Text& w) {
  const std::size_t n = w.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Symbol a = w[(i + k) % n];
    const Symbol b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace detail

inline bool is_primitive(const Text& w) {
  if (w.empty()) return false;
  const std::size_t p = detail::smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

/// A primitive word stored in its lexicographically least rotation.
class CyclicWord {
 public:
  /// Canonicalizes `w`; throws validation_error if it is empty or not primitive.
  static CyclicWord from_rotation(const Text& w) {
    if (w.empty()) throw validation_error("cyclic word must be non-empty");
    if (!is_primitive(w)) throw validation_error("cyclic word is not primitive: " + to_letters(w));
    const std::size_t start = detail::least_rotation(w);
    Text rot(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) rot[i] = w[(start + i) % w.size()];
    return CyclicWord(std::move(rot));
  }

  const Text& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  /// Symbol at cyclic offset `i` (any non-negative value).
  Symbol at_cyclic(std::size_t i) const { return symbols_[i % symbols_.size()]; }

  /// Canonical order of words inside a multiset: shorter first, then lexicographic.
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.symbols_ < b.symbols_;
  }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(Text s) : symbols_(std::move(s)) {}
  Text symbols_;
};

inline CyclicWord canonical_rotation(const Text& w) { return CyclicWord::from_rotation(w); }

/// Multiset of primitive cyclic words in canonical (shortlex) order, so that
/// multiset equality is sequence equality.
class CyclicMultiset {
 public:
  CyclicMultiset() = default;
  explicit CyclicMultiset(std::vector<CyclicWord> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    for (const auto& w : words_) total_ += w.size();
  }

  /// Builds from arbitrary rotations; every word must be primitive.
  static CyclicMultiset from_words(const std::vector<Text>& words) {
    std::vector<CyclicWord> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(CyclicWord::from_rotation(w));
    return CyclicMultiset(std::move(out));
  }
  static CyclicMultiset from_letters(const std::vector<std::string>& words) {
    std::vector<Text> t;
    for (const auto& w : words) t.push_back(lcpinfer::from_letters(w));
    return from_words(t);
  }

  const std::vector<CyclicWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  std::size_t total_length() const { return total_; }
  /// Word by 1-based index.
  const CyclicWord& word(std::size_t index) const { return words_.at(index - 1); }

  std::vector<std::string> letters() const {
    std::vector<std::string> out;
    for (const auto& w : words_) out.push_back(to_letters(w.symbols()));
    return out;
  }

  friend bool operator==(const CyclicMultiset& a, const CyclicMultiset& b) { return a.words_ == b.words_; }

 private:
  std::vector<CyclicWord> words_;
  std::size_t total_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const CyclicMultiset& w) {
  os << '<';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << to_letters(w.words()[i].symbols());
  return os << '>';
}

/// Position <word, offset> with a 1-based word index.
struct Position {
  std::size_t word = 1;
  std::size_t offset = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << '<' << p.word << ',' << p.offset << '>';
}

using Psi = std::vector<std::size_t>;
using SuffixArray = std::vector<Position>;

/// The stable-sort permutation: sorted(v)[i] == v[psi[i]].
inline Psi standard_permutation(const Text& v) {
  if (v.empty()) throw argument_error("standard permutation of an empty string");
  std::vector<std::size_t> start(alphabet_extent(v) + 1, 0);
  for (Symbol c : v) ++start[c + 1u];
  std::partial_sum(start.begin(), start.end(), start.begin());
  Psi psi(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) psi[start[v[j]]++] = j;
  return psi;
}

inline Text sorted_text(const Text& v) {
  Text s = v;
  std::sort(s.begin(), s.end());
  return s;
}

/// Cycles of `psi`, each listed from its smallest element.
inline std::vector<std::vector<std::size_t>> psi_cycles(const Psi& psi) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(psi.size(), false);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (seen[i]) continue;
    auto& c = cycles.emplace_back();
    for (std::size_t j = i; !seen[j]; j = psi[j]) {
      seen[j] = true;
      c.push_back(j);
    }
  }
  return cycles;
}

inline CyclicMultiset ibwt(const Text& v) {
  const Psi psi = standard_permutation(v);
  std::vector<CyclicWord> words;
  for (const auto& cycle : psi_cycles(psi)) {
    Text w;
    w.reserve(cycle.size());
    for (std::size_t j : cycle) w.push_back(v[psi[j]]);
    words.push_back(CyclicWord::from_rotation(w));
  }
  return CyclicMultiset(std::move(words));
}

namespace detail {

inline void check_position(const CyclicMultiset& w, const Position& p) {
  if (p.word < 1 || p.word > w.size() || p.offset >= w.word(p.word).size()) {
    throw argument_error("invalid position <" + std::to_string(p.word) + "," + std::to_string(p.offset) + ">");
  }
}

// Index of the first mismatch, or `bound` when the first `bound` symbols agree.
inline std::size_t mismatch_index(const CyclicWord& a, std::size_t pa, const CyclicWord& b, std::size_t pb,
                                  std::size_t bound) {
  std::size_t t = 0;
  while (t < bound && a.at_cyclic(pa + t) == b.at_cyclic(pb + t)) ++t;
  return t;
}

}  // namespace detail

/// Lexicographic order of two infinite cyclic suffixes. Agreement on
/// |w_i| + |w_j| symbols implies agreement forever.
inline std::weak_ordering compare_cyclic_suffixes(const CyclicMultiset& w, const Position& p, const Position& q) {
  detail::check_position(w, p);
  detail::check_position(w, q);
  const auto& a = w.word(p.word);
  const auto& b = w.word(q.word);
  const std::size_t bound = a.size() + b.size();
  const std::size_t t = detail::mismatch_index(a, p.offset, b, q.offset, bound);
  if (t == bound) return std::weak_ordering::equivalent;
  return a.at_cyclic(p.offset + t) < b.at_cyclic(q.offset + t) ? std::weak_ordering::less
                                                                : std::weak_ordering::greater;
}

inline ExtNat lcp_of_pair(const CyclicMultiset& w, const Position& p, const Position& q) {
  detail::check_position(w, p);
  detail::check_position(w, q);
  const auto& a = w.word(p.word);
  const auto& b = w.word(q.word);
  const std::size_t bound = a.size() + b.size();
  const std::size_t t = detail::mismatch_index(a, p.offset, b, q.offset, bound);
  return t == bound ? kOmega : ExtNat(t);
}

/// Comparison-sorted positions; identical suffixes keep (word, offset) order.
inline SuffixArray suffix_array(const CyclicMultiset& w) {
  if (w.empty()) throw argument_error("suffix array of an empty multiset");
  SuffixArray sa;
  sa.reserve(w.total_length());
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t p = 0; p < w.word(i).size(); ++p) sa.push_back({i, p});
  }
  std::stable_sort(sa.begin(), sa.end(), [&](const Position& x, const Position& y) {
    return compare_cyclic_suffixes(w, x, y) < 0;
  });
  return sa;
}

inline LcpArray lcp_array(const CyclicMultiset& w, const SuffixArray& sa) {
  LcpArray lcp;
  if (sa.size() > 1) lcp.reserve(sa.size() - 1);
  for (std::size_t j = 1; j < sa.size(); ++j) lcp.push_back(lcp_of_pair(w, sa[j - 1], sa[j]));
  return lcp;
}

inline LcpArray lcp_array(const CyclicMultiset& w) { return lcp_array(w, suffix_array(w)); }

inline Text bwt(const CyclicMultiset& w) {
  if (w.empty()) return {};
  Text v;
  v.reserve(w.total_length());
  for (const Position& p : suffix_array(w)) {
    const auto& word = w.word(p.word);
    v.push_back(word[(p.offset + word.size() - 1) % word.size()]);
  }
  return v;
}

/// First k symbols of the i-th sorted suffix, spelled by following psi over sorted(v).
inline Text suffix_via_psi(const Text& v, std::size_t i, std::size_t k) {
  if (k == 0) return {};
  const Psi psi = standard_permutation(v);
  if (i >= v.size()) throw argument_error("suffix index out of range");
  const Text sorted = sorted_text(v);
  Text out;
  out.reserve(k);
  for (std::size_t t = 0; t < k; ++t, i = psi[i]) out.push_back(sorted[i]);
  return out;
}

/// LCP array of IBWT(v) computed straight from v: suffix i is spelled by
/// iterating psi from i, so no multiset or suffix sorting is needed.
inline LcpArray lcp_array_of_bwt(const Text& v) {
  if (v.empty()) throw argument_error("empty BWT");
  const std::size_t n = v.size();
  const Psi psi = standard_permutation(v);
  const Text sorted = sorted_text(v);
  std::vector<std::size_t> cycle_len(n, 0);
  for (const auto& c : psi_cycles(psi)) {
    for (std::size_t j : c) cycle_len[j] = c.size();
  }
  LcpArray lcp;
  lcp.reserve(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t bound = cycle_len[j - 1] + cycle_len[j];
    std::size_t x = j - 1, y = j, t = 0;
    while (t < bound && sorted[x] == sorted[y]) {
      x = psi[x];
      y = psi[y];
      ++t;
    }
    lcp.push_back(t == bound ? kOmega : ExtNat(t));
  }
  return lcp;
}

/// Number of cycles of the standard permutation, i.e. |IBWT(v)|.
inline std::size_t ibwt_word_count(const Text& v) {
  const Psi psi = standard_permutation(v);
  std::vector<bool> seen(v.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = psi[j]) seen[j] = true;
  }
  return count;
}

}  // namespace lcpinfer
