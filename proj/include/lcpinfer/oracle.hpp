#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for every LCP-array variant.
 *
 * Non-cyclic arrays are computed over ordinary (finite) suffixes. A
 * terminated string gets a $ smaller than every letter; in a terminated set
 * string i gets its own terminator $_i with $_1 < $_2 < ... < a.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "lcpinfer/cyclic.hpp"
#include "lcpinfer/errors.hpp"
#include "lcpinfer/ext_nat.hpp"
#include "lcpinfer/text.hpp"

namespace lcpinfer {

enum class VariantKind { CyclicSet, CyclicSingle, TerminatedSingle, OpenSingle, TerminatedSet, OpenSet };

inline const char* variant_kind_name(VariantKind k) {
  switch (k) {
    case VariantKind::CyclicSet:
      return "cyclic-set";
    case VariantKind::CyclicSingle:
      return "cyclic";
    case VariantKind::TerminatedSingle:
      return "terminated";
    case VariantKind::OpenSingle:
      return "open";
    case VariantKind::TerminatedSet:
      return "terminated-set";
    default:
      return "open-set";
  }
}

inline VariantKind parse_variant_kind(const std::string& s) {
  for (VariantKind k : {VariantKind::CyclicSet, VariantKind::CyclicSingle, VariantKind::TerminatedSingle,
                        VariantKind::OpenSingle, VariantKind::TerminatedSet, VariantKind::OpenSet}) {
    if (s == variant_kind_name(k)) return k;
  }
  throw argument_error("unknown variant '" + s + "'");
}

inline bool is_set_variant(VariantKind k) {
  return k == VariantKind::CyclicSet || k == VariantKind::TerminatedSet || k == VariantKind::OpenSet;
}

namespace detail {

using Seq = std::vector<int>;

/// LCP array of all finite suffixes of `seqs`, sorted lexicographically
/// with a proper prefix first.
inline LcpArray finite_suffix_lcp(const std::vector<Seq>& seqs) {
  struct Suf {
    std::size_t s, off;
  };
  std::vector<Suf> all;
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    for (std::size_t off = 0; off < seqs[s].size(); ++off) all.push_back({s, off});
  }
  auto cmp = [&](const Suf& x, const Suf& y) {
    const auto& a = seqs[x.s];
    const auto& b = seqs[y.s];
    const bool less = std::lexicographical_compare(a.begin() + static_cast<std::ptrdiff_t>(x.off), a.end(),
                                                   b.begin() + static_cast<std::ptrdiff_t>(y.off), b.end());
    return less;
  };
  std::stable_sort(all.begin(), all.end(), cmp);
  LcpArray out;
  for (std::size_t j = 1; j < all.size(); ++j) {
    const auto& a = seqs[all[j - 1].s];
    const auto& b = seqs[all[j].s];
    std::size_t p = all[j - 1].off, q = all[j].off, l = 0;
    while (p + l < a.size() && q + l < b.size() && a[p + l] == b[q + l]) ++l;
    out.emplace_back(l);
  }
  return out;
}

inline Seq letters_of(const Text& t) { return Seq(t.begin(), t.end()); }

}  // namespace detail

inline LcpArray lcp_terminated(const Text& s) {
  auto seq = detail::letters_of(s);
  seq.push_back(-1);
  return detail::finite_suffix_lcp({seq});
}

inline LcpArray lcp_open(const Text& s) {
  if (s.empty()) throw argument_error("empty string");
  return detail::finite_suffix_lcp({detail::letters_of(s)});
}

inline LcpArray lcp_terminated_set(const std::vector<Text>& words) {
  std::vector<detail::Seq> seqs;
  const int k = static_cast<int>(words.size());
  for (int i = 0; i < k; ++i) {
    auto seq = detail::letters_of(words[static_cast<std::size_t>(i)]);
    seq.push_back(i - k);
    seqs.push_back(std::move(seq));
  }
  return detail::finite_suffix_lcp(seqs);
}

inline LcpArray lcp_open_set(const std::vector<Text>& words) {
  std::vector<detail::Seq> seqs;
  for (const auto& w : words) {
    if (w.empty()) throw argument_error("empty string in set");
    seqs.push_back(detail::letters_of(w));
  }
  return detail::finite_suffix_lcp(seqs);
}

/// LCP array of s_1 $_1 s_2 $_2 ... s_k $_k read as one string.
inline LcpArray lcp_of_concatenation(const std::vector<Text>& words) {
  detail::Seq seq;
  const int k = static_cast<int>(words.size());
  for (int i = 0; i < k; ++i) {
    for (Symbol c : words[static_cast<std::size_t>(i)]) seq.push_back(c);
    seq.push_back(i - k);
  }
  return detail::finite_suffix_lcp({seq});
}

/// The LCP array of `input` under `kind`. Single variants take one word.
inline LcpArray lcp_variant(const std::vector<Text>& input, VariantKind kind) {
  if (input.empty()) throw argument_error("no input words");
  if (!is_set_variant(kind) && input.size() != 1) throw argument_error("single-string variant given several words");
  switch (kind) {
    case VariantKind::CyclicSet:
    case VariantKind::CyclicSingle:
      try {
        return lcp_array(CyclicMultiset::from_words(input));
      } catch (const validation_error& e) {
        throw argument_error(e.what());
      }
    case VariantKind::TerminatedSingle:
      return lcp_terminated(input[0]);
    case VariantKind::OpenSingle:
      return lcp_open(input[0]);
    case VariantKind::TerminatedSet:
      return lcp_terminated_set(input);
    case VariantKind::OpenSet:
      return lcp_open_set(input);
  }
  return {};
}

/// One brute-force solution: for cyclic variants `bwt` is the enumerated BWT
/// and `words` its IBWT; otherwise `words` is the string or string set.
struct OracleSolution {
  Text bwt;
  std::vector<Text> words;
  friend auto operator<=>(const OracleSolution&, const OracleSolution&) = default;
};

inline constexpr double kOracleGuard = 1e7;

namespace detail {

inline void check_guard(double candidates, double guard) {
  if (candidates > guard) {
    throw resource_error("oracle would enumerate " + std::to_string(static_cast<std::uint64_t>(candidates)) +
                             " candidates",
                         static_cast<std::uint64_t>(guard));
  }
}

/// Calls f on every string of length n over sigma symbols, lexicographically.
inline void for_each_string(std::size_t n, std::size_t sigma, const std::function<void(const Text&)>& f) {
  Text t(n, 0);
  while (true) {
    f(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] + 1u == sigma) t[--i] = 0;
    if (i == 0) return;
    ++t[i - 1];
  }
}

/// Calls f on every multiset of non-empty strings with total length `total`,
/// each multiset listed once as a non-decreasing (length, lex) sequence.
inline void for_each_string_multiset(std::size_t total, std::size_t sigma,
                                     const std::function<void(const std::vector<Text>&)>& f) {
  std::vector<Text> pool;
  for (std::size_t len = 1; len <= total; ++len) for_each_string(len, sigma, [&](const Text& t) { pool.push_back(t); });
  std::vector<Text> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      f(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].size() > left) break;
      cur.push_back(pool[i]);
      rec(i, left - pool[i].size());
      cur.pop_back();
    }
  };
  if (total > 0) rec(0, total);
}

}  // namespace detail

/// Every input over sigma symbols whose `kind` LCP array equals `lcp`.
inline std::vector<OracleSolution> brute_force_solutions(const LcpArray& lcp, std::size_t sigma, VariantKind kind,
                                                         double guard = kOracleGuard) {
  if (sigma == 0 || sigma > kMaxSigma) throw argument_error("sigma out of range");
  std::vector<OracleSolution> out;
  const double s = static_cast<double>(sigma);
  switch (kind) {
    case VariantKind::CyclicSet:
    case VariantKind::CyclicSingle: {
      const std::size_t n = lcp.size() + 1;
      detail::check_guard(std::pow(s, static_cast<double>(n)), guard);
      detail::for_each_string(n, sigma, [&](const Text& v) {
        if (kind == VariantKind::CyclicSingle && ibwt_word_count(v) != 1) return;
        if (lcp_array_of_bwt(v) != lcp) return;
        const auto w = ibwt(v);
        std::vector<Text> words;
        for (const auto& x : w.words()) words.push_back(x.symbols());
        out.push_back({v, std::move(words)});
      });
      break;
    }
    case VariantKind::TerminatedSingle:
    case VariantKind::OpenSingle: {
      const std::size_t n = kind == VariantKind::TerminatedSingle ? lcp.size() : lcp.size() + 1;
      detail::check_guard(std::pow(s, static_cast<double>(n)), guard);
      if (n == 0) break;
      detail::for_each_string(n, sigma, [&](const Text& t) {
        if (lcp_variant({t}, kind) == lcp) out.push_back({{}, {t}});
      });
      break;
    }
    case VariantKind::TerminatedSet:
    case VariantKind::OpenSet: {
      // Terminated: total letters + k - 1 = |lcp|; open: total letters - 1 = |lcp|.
      const std::size_t max_total = kind == VariantKind::TerminatedSet ? lcp.size() : lcp.size() + 1;
      detail::check_guard(std::pow(2.0 * s, static_cast<double>(max_total)), guard);
      for (std::size_t total = 1; total <= max_total; ++total) {
        detail::for_each_string_multiset(total, sigma, [&](const std::vector<Text>& ws) {
          const std::size_t len = kind == VariantKind::TerminatedSet ? total + ws.size() - 1 : total - 1;
          if (len != lcp.size()) return;
          if (lcp_variant(ws, kind) == lcp) out.push_back({{}, ws});
        });
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Map from LCP array to its generating inputs: BWTs for cyclic variants,
/// the strings themselves for single non-cyclic variants.
using OracleTable = std::map<LcpArray, std::vector<Text>>;

/// Enumerates all sigma^n candidates of length n. `jobs` > 1 splits the work
/// on the first symbol; the merged table is identical to the serial one.
inline OracleTable build_oracle_table(std::size_t n, std::size_t sigma, VariantKind kind, std::size_t jobs = 1,
                                      double guard = kOracleGuard) {
  if (is_set_variant(kind) && kind != VariantKind::CyclicSet) {
    throw argument_error("oracle tables cover string-keyed variants only");
  }
  if (n == 0 || sigma == 0) throw argument_error("n and sigma must be positive");
  detail::check_guard(std::pow(static_cast<double>(sigma), static_cast<double>(n)), guard);

  auto fill = [&](Symbol first, OracleTable& table) {
    detail::for_each_string(n - 1, sigma, [&](const Text& rest) {
      Text t{first};
      t.insert(t.end(), rest.begin(), rest.end());
      LcpArray key;
      switch (kind) {
        case VariantKind::CyclicSingle:
          if (ibwt_word_count(t) != 1) return;
          [[fallthrough]];
        case VariantKind::CyclicSet:
          key = lcp_array_of_bwt(t);
          break;
        default:
          key = lcp_variant({t}, kind);
      }
      table[key].push_back(t);
    });
  };

  std::vector<OracleTable> parts(sigma);
  if (jobs <= 1) {
    for (std::size_t c = 0; c < sigma; ++c) fill(static_cast<Symbol>(c), parts[c]);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mu;
    for (std::size_t t = 0; t < std::min(jobs, sigma); ++t) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t c;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next == sigma) return;
            c = next++;
          }
          fill(static_cast<Symbol>(c), parts[c]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  // Parts are keyed by first symbol, so concatenating in symbol order keeps
  // every value list lexicographic.
  OracleTable table;
  for (auto& part : parts) {
    for (auto& [k, vs] : part) {
      auto& dst = table[k];
      dst.insert(dst.end(), vs.begin(), vs.end());
    }
  }
  return table;
}

/// True when `t` uses exactly the symbols 0..k-1 for some k, the
/// normal form the inference algorithms report.
inline bool uses_leading_alphabet(const Text& t) {
  const std::size_t sigma = alphabet_extent(t);
  std::vector<bool> seen(sigma, false);
  for (Symbol c : t) seen[c] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace lcpinfer
