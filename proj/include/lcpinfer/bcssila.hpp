#pragma once

/**
 * @file bcssila.hpp
 * @brief Binary cyclic string-set inference from an LCP array.
 *
 * infer() reconstructs a BWT v over {a, b} such that the LCP array of
 * IBWT(v) equals the input, together with a set of disjoint swap intervals.
 * Exchanging the a-half and b-half of any subset of swap intervals yields
 * every other solution, so a result with s swaps stands for 2^s BWTs.
 *
 * The recursion walks x-intervals top-down. Each frame carries the x-, ax-
 * and bx-intervals of some unknown string x and either fixes v over the
 * x-interval or splits all three at their range minima.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lcpinfer/cyclic.hpp"
#include "lcpinfer/errors.hpp"
#include "lcpinfer/ext_nat.hpp"
#include "lcpinfer/rmq.hpp"
#include "lcpinfer/text.hpp"

namespace lcpinfer {

inline constexpr Symbol kSymA = 0;
inline constexpr Symbol kSymB = 1;

/// Half-open index range [lo..hi).
struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t size() const { return hi - lo; }
  bool empty() const { return hi <= lo; }
  friend auto operator<=>(const Range&, const Range&) = default;
};

/// BWT range whose a-half and b-half may be exchanged without changing the
/// LCP array. The stored BWT always holds the a-half first.
struct SwapInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t mid() const { return (lo + hi) / 2; }
  friend auto operator<=>(const SwapInterval&, const SwapInterval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SwapInterval& s) {
  return os << '[' << s.lo << ".." << s.hi << ')';
}

struct InferenceResult {
  Text bwt;
  std::vector<SwapInterval> swaps;  // sorted by position, pairwise disjoint

  /// Bracket rendering, e.g. "b[ab]bbaa".
  std::string render() const {
    std::string out;
    std::size_t next = 0;
    for (std::size_t i = 0; i < bwt.size(); ++i) {
      if (next < swaps.size() && swaps[next].lo == i) out += '[';
      out += static_cast<char>('a' + bwt[i]);
      if (next < swaps.size() && swaps[next].hi == i + 1) {
        out += ']';
        ++next;
      }
    }
    return out;
  }

  friend bool operator==(const InferenceResult&, const InferenceResult&) = default;
};

/// The x-, ax- and bx-intervals handed to one InferInterval step.
struct InferFrame {
  Range x, ax, bx;
  friend bool operator==(const InferFrame&, const InferFrame&) = default;
};

/// Work counters for one inference run (final verification excluded).
struct InferStats {
  std::uint64_t frames = 0;
  std::uint64_t rmq_queries = 0;
  std::uint64_t compared_entries = 0;
  std::uint64_t assigned_symbols = 0;

  std::uint64_t total() const { return frames + rmq_queries + compared_entries + assigned_symbols; }
};

/// Incremental BWT construction driven one frame at a time.
class BwtBuilder {
 public:
  static constexpr Symbol kUnset = 0xFF;

  struct Step {
    std::vector<InferFrame> children;
    std::optional<SwapInterval> swap;
  };

  explicit BwtBuilder(const LcpArray& lcp) : rmq_(lcp), bwt_(lcp.size() + 1, kUnset) {}

  const Text& bwt() const { return bwt_; }
  const InferStats& stats() const { return stats_; }
  /// Set once a frame violated an invariant that holds for every valid array.
  bool malformed() const { return malformed_; }

  /// One InferInterval step: fixes part of the BWT and returns the frames
  /// still to be processed.
  Step infer_interval(const InferFrame& f) {
    ++stats_.frames;
    Step step;
    const Range x = f.x, ax = f.ax, bx = f.bx;
    if (ax.empty() || bx.empty() || x.size() < 2 || x.size() != ax.size() + bx.size() || x.hi > bwt_.size() ||
        ax.hi > bwt_.size() || bx.hi > bwt_.size()) {
      malformed_ = true;
      return step;
    }
    const std::size_t kx = rmq(x.lo + 1, x.hi);
    const ExtNat mx = at(kx);
    const ExtNat mx1 = mx + 1;

    std::size_t kax = ax.lo, kbx = bx.lo;
    ExtNat max = kOmega, mbx = kOmega;
    if (ax.size() > 1) {
      kax = rmq(ax.lo + 1, ax.hi);
      max = at(kax);
    }
    if (bx.size() > 1) {
      kbx = rmq(bx.lo + 1, bx.hi);
      mbx = at(kbx);
    }

    const Range left{x.lo, kx}, right{kx, x.hi};
    if (max > mx1 && mbx > mx1) {
      if (shifted_equal(ax, left)) {
        fill(left, kSymA);
        fill(right, kSymB);
        if (shifted_equal(ax, right)) step.swap = SwapInterval{x.lo, x.hi};
      } else {
        fill(left, kSymB);
        fill(right, kSymA);
      }
    } else if (max > mx1) {
      if (kbx - bx.lo == kx - x.lo) {
        fill(left, kSymB);
        step.children.push_back({right, ax, {kbx, bx.hi}});
      } else {
        fill(right, kSymB);
        step.children.push_back({left, ax, {bx.lo, kbx}});
      }
    } else if (mbx > mx1) {
      if (kax - ax.lo == kx - x.lo) {
        fill(left, kSymA);
        step.children.push_back({right, {kax, ax.hi}, bx});
      } else {
        fill(right, kSymA);
        step.children.push_back({left, {ax.lo, kax}, bx});
      }
    } else {
      step.children.push_back({left, {ax.lo, kax}, {bx.lo, kbx}});
      step.children.push_back({right, {kax, ax.hi}, {kbx, bx.hi}});
    }
    return step;
  }

 private:
  std::size_t rmq(std::size_t i, std::size_t j) {
    ++stats_.rmq_queries;
    return rmq_.query(i, j);
  }
  const ExtNat& at(std::size_t k) const { return rmq_.at(k); }

  void fill(Range r, Symbol c) {
    for (std::size_t i = r.lo; i < r.hi; ++i) {
      if (bwt_[i] != kUnset) malformed_ = true;
      bwt_[i] = c;
    }
    stats_.assigned_symbols += r.size();
  }

  // LCP[a.lo+1..a.hi) == 1 + LCP[b.lo+1..b.hi)
  bool shifted_equal(Range a, Range b) {
    if (a.size() != b.size()) return false;
    for (std::size_t t = 1; t < a.size(); ++t) {
      ++stats_.compared_entries;
      if (at(a.lo + t) != at(b.lo + t) + 1) return false;
    }
    return true;
  }

  RmqIndex rmq_;
  Text bwt_;
  InferStats stats_;
  bool malformed_ = false;
};

/// LCP_{IBWT(candidate)} == lcp.
inline bool verify(const LcpArray& lcp, const Text& candidate) {
  if (candidate.size() != lcp.size() + 1) {
    throw argument_error("candidate length " + std::to_string(candidate.size()) + " != |lcp| + 1 = " +
                         std::to_string(lcp.size() + 1));
  }
  return lcp_array_of_bwt(candidate) == lcp;
}

/// Runs the inference recursion without the final verification.
inline std::optional<InferenceResult> infer_unverified(const LcpArray& lcp, InferStats* stats = nullptr) {
  const std::size_t n = lcp.size() + 1;
  if (n == 1) return InferenceResult{{kSymA}, {}};

  BwtBuilder builder(lcp);
  const RmqIndex top(lcp);
  const std::size_t k = top.query(1, n);
  const ExtNat& mn = lcp[k - 1];
  if (stats) ++stats->rmq_queries;
  if (mn != ExtNat(0)) {
    if (mn.is_omega()) return InferenceResult{Text(n, kSymA), {}};
    return std::nullopt;
  }

  std::vector<SwapInterval> swaps;
  std::vector<InferFrame> work{{{0, n}, {0, k}, {k, n}}};
  while (!work.empty()) {
    const InferFrame f = work.back();
    work.pop_back();
    auto step = builder.infer_interval(f);
    if (builder.malformed()) break;
    if (step.swap) swaps.push_back(*step.swap);
    for (auto it = step.children.rbegin(); it != step.children.rend(); ++it) work.push_back(*it);
  }
  if (stats) {
    const auto& s = builder.stats();
    stats->frames += s.frames;
    stats->rmq_queries += s.rmq_queries;
    stats->compared_entries += s.compared_entries;
    stats->assigned_symbols += s.assigned_symbols;
  }
  if (builder.malformed()) return std::nullopt;
  for (Symbol c : builder.bwt()) {
    if (c == BwtBuilder::kUnset) return std::nullopt;
  }
  std::sort(swaps.begin(), swaps.end());
  return InferenceResult{builder.bwt(), std::move(swaps)};
}

/// Infers a BWT plus swap intervals, or nullopt when no binary BWT has
/// this LCP array. Every returned result has been verified.
inline std::optional<InferenceResult> infer(const LcpArray& lcp, InferStats* stats = nullptr) {
  auto result = infer_unverified(lcp, stats);
  if (!result || !verify(lcp, result->bwt)) return std::nullopt;
  return result;
}

inline Text apply_swap_mask(const InferenceResult& result, const std::vector<bool>& mask) {
  if (mask.size() != result.swaps.size()) throw argument_error("swap mask size mismatch");
  Text v = result.bwt;
  for (std::size_t t = 0; t < mask.size(); ++t) {
    if (!mask[t]) continue;
    const auto& s = result.swaps[t];
    const std::size_t half = (s.hi - s.lo) / 2;
    for (std::size_t i = 0; i < half; ++i) std::swap(v[s.lo + i], v[s.lo + half + i]);
  }
  return v;
}

/// Applies the listed intervals; each must be one of the result's swaps.
inline Text apply_swaps(const InferenceResult& result, const std::vector<SwapInterval>& selected) {
  std::vector<bool> mask(result.swaps.size(), false);
  for (const auto& s : selected) {
    auto it = std::lower_bound(result.swaps.begin(), result.swaps.end(), s);
    if (it == result.swaps.end() || *it != s) {
      throw argument_error("interval [" + std::to_string(s.lo) + ".." + std::to_string(s.hi) + ") is not a swap");
    }
    mask[static_cast<std::size_t>(it - result.swaps.begin())] = true;
  }
  return apply_swap_mask(result, mask);
}

struct BwtEnumeration {
  std::vector<Text> bwts;
  bool truncated = false;
};

/// Mask applications in lexicographic mask order (first swap is the most
/// significant bit), stopping after `limit` strings.
inline BwtEnumeration enumerate_bwts(const InferenceResult& result, std::size_t limit) {
  if (limit == 0) throw argument_error("limit must be at least 1");
  BwtEnumeration out;
  const std::size_t s = result.swaps.size();
  std::vector<bool> mask(s, false);
  while (true) {
    if (out.bwts.size() == limit) {
      out.truncated = true;
      return out;
    }
    out.bwts.push_back(apply_swap_mask(result, mask));
    // Increment the mask as a big-endian binary counter.
    std::size_t t = s;
    while (t > 0 && mask[t - 1]) mask[--t] = false;
    if (t == 0) return out;
    mask[t - 1] = true;
  }
}

}  // namespace lcpinfer
