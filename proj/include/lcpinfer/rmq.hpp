#pragma once

#include <bit>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "lcpinfer/errors.hpp"
#include "lcpinfer/ext_nat.hpp"

namespace lcpinfer {

/// Sparse-table range minimum index over LCP[1..n).
///
/// Positions are 1-based to match LCP indexing; query(i, j) covers [i..j)
/// and returns the leftmost position holding the minimum.
class RmqIndex {
 public:
  RmqIndex() = default;
  explicit RmqIndex(LcpArray lcp) : lcp_(std::move(lcp)) {
    const auto& l = lcp_;
    const std::size_t m = l.size();
    if (m == 0) return;
    const std::size_t levels = std::bit_width(m);
    table_.resize(levels);
    table_[0].resize(m);
    for (std::size_t k = 0; k < m; ++k) table_[0][k] = k;
    for (std::size_t lvl = 1; lvl < levels; ++lvl) {
      const std::size_t span = std::size_t{1} << lvl;
      auto& row = table_[lvl];
      const auto& prev = table_[lvl - 1];
      row.resize(m - span + 1);
      for (std::size_t k = 0; k + span <= m; ++k) row[k] = better(prev[k], prev[k + span / 2]);
    }
  }

  /// Number of LCP entries indexed (n - 1).
  std::size_t size() const { return lcp_.size(); }

  std::size_t query(std::size_t i, std::size_t j) const {
    if (i < 1 || j > size() + 1 || i >= j) {
      throw argument_error("RMQ range [" + std::to_string(i) + ".." + std::to_string(j) + ") invalid");
    }
    const std::size_t lo = i - 1, len = j - i;
    const std::size_t lvl = std::bit_width(len) - 1;
    return better(table_[lvl][lo], table_[lvl][lo + len - (std::size_t{1} << lvl)]) + 1;
  }

  /// Value at a 1-based LCP position.
  const ExtNat& at(std::size_t k) const { return lcp_[k - 1]; }

 private:
  std::size_t better(std::size_t a, std::size_t b) const {
    const auto& l = lcp_;
    if (l[b] < l[a]) return b;
    if (l[a] < l[b]) return a;
    return a < b ? a : b;
  }

  LcpArray lcp_;
  std::vector<std::vector<std::size_t>> table_;
};

inline RmqIndex build_rmq(const LcpArray& lcp) { return RmqIndex(lcp); }

/// Half-open suffix-array range [lo..hi) whose interior LCP minimum is `ell`.
struct LInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  ExtNat ell;
  friend auto operator<=>(const LInterval&, const LInterval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const LInterval& x) {
  return os << x.ell << "-[" << x.lo << ".." << x.hi << ")";
}

/// All l-intervals of an LCP array, parents before children. The root is
/// [0..n) for n = |lcp| + 1; every interval with finite l is split at each
/// occurrence of its minimum.
inline std::vector<LInterval> enumerate_l_intervals(const LcpArray& lcp) {
  const std::size_t n = lcp.size() + 1;
  const RmqIndex rmq(lcp);
  std::vector<LInterval> out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n}};
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo == 1) {
      out.push_back({lo, hi, kOmega});
      continue;
    }
    const std::size_t k = rmq.query(lo + 1, hi);
    const ExtNat ell = rmq.at(k);
    out.push_back({lo, hi, ell});
    if (ell.is_omega()) continue;
    std::vector<std::size_t> cuts{lo};
    for (std::size_t c = k; c < hi;) {
      cuts.push_back(c);
      if (c + 1 >= hi) break;
      const std::size_t next = rmq.query(c + 1, hi);
      if (rmq.at(next) != ell) break;
      c = next;
    }
    cuts.push_back(hi);
    for (std::size_t t = cuts.size() - 1; t > 0; --t) stack.emplace_back(cuts[t - 1], cuts[t]);
  }
  return out;
}

}  // namespace lcpinfer
