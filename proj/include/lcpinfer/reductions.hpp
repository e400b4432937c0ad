#pragma once

/**
 * @file reductions.hpp
 * @brief Constructions linking CCEC, binary LCP inference and its variants.
 *
 * ccec_to_multiset spells one cyclic word per cycle of a CCEC instance's
 * initial state, using two vertex strings per vertex. bwt_graph goes the
 * other way: it turns the swap intervals of an inference result into a CCEC
 * instance whose Eulerian states are exactly the single-string solutions.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lcpinfer/bcssila.hpp"
#include "lcpinfer/ccec.hpp"
#include "lcpinfer/cyclic.hpp"
#include "lcpinfer/errors.hpp"
#include "lcpinfer/ext_nat.hpp"
#include "lcpinfer/rmq.hpp"
#include "lcpinfer/text.hpp"

namespace lcpinfer {

/// ba^k b a^{m+2h} and bb a^k bb a^{m+2h-1} for partition k, vertex h and m
/// partitions.
inline std::pair<Text, Text> vertex_strings(std::size_t k, std::size_t h, std::size_t m) {
  if (k < 1 || h < 1) throw argument_error("vertex and partition numbers start at 1");
  Text s1{kSymB}, s2{kSymB, kSymB};
  s1.insert(s1.end(), k, kSymA);
  s1.push_back(kSymB);
  s1.insert(s1.end(), m + 2 * h, kSymA);
  s2.insert(s2.end(), k, kSymA);
  s2.push_back(kSymB);
  s2.push_back(kSymB);
  s2.insert(s2.end(), m + 2 * h - 1, kSymA);
  return {s1, s2};
}

/// Length of the unique longest a-run, m + 2n.
inline std::size_t longest_run(const CcecInstance& g) { return g.partition_count() + 2 * g.vertex_count(); }

/// Concatenates vertex strings along the cycles of the initial state. Cycles
/// are taken in order of their lowest-numbered vertex and read from a pass
/// through that vertex; the first pass through a vertex uses string 1.
inline std::vector<Text> ccec_words(const CcecInstance& g) {
  if (!g.ready()) throw instance_error("instance not finalized");
  if (g.vertex_count() == 0) throw instance_error("empty CCEC instance");
  const std::size_t m = g.partition_count();

  auto cyc = cycles(g, g.initial_state());
  // Head vertex of each edge is the vertex that edge passes into.
  auto head = [&](std::size_t e) { return g.edges()[e].to.vertex; };
  for (auto& c : cyc) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < c.size(); ++t) {
      if (head(c[t]) < head(c[best])) best = t;
    }
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(best), c.end());
  }
  std::sort(cyc.begin(), cyc.end(), [&](const auto& x, const auto& y) { return head(x[0]) < head(y[0]); });

  std::vector<bool> used_first(g.vertex_count(), false);
  std::vector<Text> words;
  for (const auto& c : cyc) {
    Text w;
    for (std::size_t e : c) {
      const std::size_t v = head(e);
      const auto [s1, s2] = vertex_strings(g.partition_of(v) + 1, v + 1, m);
      const Text& s = used_first[v] ? s2 : s1;
      used_first[v] = true;
      w.insert(w.end(), s.begin(), s.end());
    }
    words.push_back(std::move(w));
  }
  return words;
}

inline CyclicMultiset ccec_to_multiset(const CcecInstance& g) { return CyclicMultiset::from_words(ccec_words(g)); }

inline LcpArray ccec_to_lcp(const CcecInstance& g) { return lcp_array(ccec_to_multiset(g)); }

inline CyclicMultiset sat_to_multiset(const Cnf& f) { return ccec_to_multiset(from_cnf(f)); }
inline LcpArray sat_to_lcp(const Cnf& f) { return ccec_to_lcp(from_cnf(f)); }

// ---------------------------------------------------------------------------
// BWT graph.

/// Edge i -> j of G_V: sorted position i carries the k-th occurrence of c,
/// which sits at BWT position j in some member of V.
struct GvEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Symbol symbol = 0;
  std::size_t rank = 0;  // 1-based k in c_k

  std::string label() const { return std::string(1, static_cast<char>('a' + symbol)) + std::to_string(rank); }
};

struct BwtGraph {
  Text bwt;
  Text sorted;
  Psi psi;
  std::vector<GvEdge> edges;
  /// Swap pairs (lower, upper) in merge order; index = CCEC vertex.
  std::vector<std::pair<std::size_t, std::size_t>> merged;
  std::vector<std::size_t> merged_swap;  // swap index of each merged vertex
  /// Interior positions of each contracted CCEC edge, in travel order.
  std::vector<std::vector<std::size_t>> paths;
  /// Psi cycles that never reach a merged vertex.
  std::size_t isolated_cycles = 0;
  CcecInstance contracted;
};

/// Builds G_V and its contraction. Merged vertex ports: in1 receives the
/// a-edge, in2 the b-edge, out1 leaves from the lower position, out2 from the
/// upper one. Straight reproduces the unswapped BWT.
inline BwtGraph bwt_graph(const InferenceResult& result) {
  BwtGraph out;
  out.bwt = result.bwt;
  out.sorted = sorted_text(result.bwt);
  out.psi = standard_permutation(result.bwt);
  const std::size_t n = result.bwt.size();

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> merged_of(n, kNone);
  std::vector<std::size_t> partner(n, kNone);
  for (std::size_t s = 0; s < result.swaps.size(); ++s) {
    const auto& sw = result.swaps[s];
    const std::size_t mid = sw.mid();
    for (std::size_t t = 0; sw.lo + t < mid; ++t) {
      const std::size_t lo = sw.lo + t, hi = mid + t;
      merged_of[lo] = merged_of[hi] = out.merged.size();
      partner[lo] = hi;
      partner[hi] = lo;
      out.merged.emplace_back(lo, hi);
      out.merged_swap.push_back(s);
    }
  }

  std::vector<std::size_t> rank_count(alphabet_extent(out.sorted) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol c = out.sorted[i];
    const std::size_t k = ++rank_count[c];
    const std::size_t j = out.psi[i];
    out.edges.push_back({i, j, c, k});
    if (partner[j] != kNone) out.edges.push_back({i, partner[j], c, k});
  }

  CcecInstance& g = out.contracted;
  for (std::size_t v = 0; v < out.merged.size(); ++v) g.add_vertex(PortState::Straight);
  std::vector<bool> visited(n, false);
  for (std::size_t v = 0; v < out.merged.size(); ++v) {
    for (std::uint8_t port = 0; port < 2; ++port) {
      const std::size_t start = port == 0 ? out.merged[v].first : out.merged[v].second;
      visited[start] = true;
      std::vector<std::size_t> path;
      std::string label;
      std::size_t pos = start;
      while (true) {
        label.push_back(static_cast<char>('a' + out.sorted[pos]));
        const std::size_t next = out.psi[pos];
        if (merged_of[next] != kNone) {
          // In the unswapped BWT an a lands on the lower position.
          const std::uint8_t in_port = next == out.merged[merged_of[next]].first ? 0 : 1;
          g.connect(v, port, merged_of[next], in_port, label);
          break;
        }
        visited[next] = true;
        path.push_back(next);
        pos = next;
      }
      out.paths.push_back(std::move(path));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    ++out.isolated_cycles;
    for (std::size_t p = i; !visited[p]; p = out.psi[p]) visited[p] = true;
  }

  std::vector<std::vector<std::size_t>> parts(result.swaps.size());
  for (std::size_t v = 0; v < out.merged.size(); ++v) parts[out.merged_swap[v]].push_back(v);
  g.set_partitions(std::move(parts));
  g.finalize();
  return out;
}

/// DOT rendering of G_V with swap pairs drawn as clusters.
inline std::string bwt_graph_to_dot(const BwtGraph& bg) {
  std::ostringstream os;
  os << "digraph gv {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < bg.merged.size(); ++v) {
    os << "  subgraph cluster_" << v << " { label=\"" << bg.merged[v].first << "/" << bg.merged[v].second
       << "\"; p" << bg.merged[v].first << "; p" << bg.merged[v].second << "; }\n";
  }
  for (std::size_t i = 0; i < bg.bwt.size(); ++i) {
    os << "  p" << i << " [label=\"" << i << ":" << static_cast<char>('a' + bg.bwt[i]) << "\"];\n";
  }
  for (const auto& e : bg.edges) os << "  p" << e.from << " -> p" << e.to << " [label=\"" << e.label() << "\"];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Single-string decision.

struct SingleStringResult {
  enum class Status { Found, None, Invalid };
  Status status = Status::Invalid;
  std::optional<CyclicWord> word;
  Text bwt;
  std::vector<bool> mask;  // swaps applied to the inferred BWT
};

inline Text bwt_for_flipset(const InferenceResult& result, const FlipSet& flips) {
  std::vector<bool> mask(result.swaps.size(), false);
  for (std::size_t p : flips.partitions) mask.at(p) = true;
  return apply_swap_mask(result, mask);
}

namespace detail {

inline SingleStringResult found(const InferenceResult& r, std::vector<bool> mask) {
  SingleStringResult out;
  out.status = SingleStringResult::Status::Found;
  out.bwt = apply_swap_mask(r, mask);
  out.mask = std::move(mask);
  out.word = ibwt(out.bwt).word(1);
  return out;
}

}  // namespace detail

/// Searches swap masks directly for a BWT with a single Psi cycle. Used as a
/// cross-check of the CCEC route and when it cannot be built.
inline SingleStringResult single_string_by_masks(const InferenceResult& r, std::size_t cap = kDefaultFlipCap) {
  const std::size_t s = r.swaps.size();
  if (s > cap || s >= 63) throw resource_error("mask search over " + std::to_string(s) + " swaps exceeds cap", cap);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s); ++m) {
    std::vector<bool> mask(s);
    for (std::size_t t = 0; t < s; ++t) mask[t] = (m >> t) & 1u;
    if (ibwt_word_count(apply_swap_mask(r, mask)) == 1) return detail::found(r, std::move(mask));
  }
  SingleStringResult out;
  out.status = SingleStringResult::Status::None;
  return out;
}

/// Decides whether some single cyclic string has LCP array `lcp`.
inline SingleStringResult single_string_decide(const LcpArray& lcp, std::size_t cap = kDefaultFlipCap,
                                               std::size_t jobs = 1) {
  SingleStringResult out;
  const auto r = infer(lcp);
  if (!r) return out;
  const BwtGraph bg = bwt_graph(*r);
  out.status = SingleStringResult::Status::None;
  if (bg.merged.empty()) {
    if (bg.isolated_cycles == 1) return detail::found(*r, {});
    return out;
  }
  // A cycle that avoids every merged vertex survives all swaps.
  if (bg.isolated_cycles > 0) return out;
  const auto flips = solve(bg.contracted, cap, jobs);
  if (!flips) return out;
  std::vector<bool> mask(r->swaps.size(), false);
  for (std::size_t p : flips->partitions) mask[p] = true;
  return detail::found(*r, std::move(mask));
}

// ---------------------------------------------------------------------------
// Terminator transform. Symbols shift up by one so that $ becomes 0.

namespace detail {

/// Rotation of a word that starts right after a b, so no a-run wraps.
inline Text unwrap_runs(const Text& w, Symbol a) {
  const auto it = std::find_if(w.begin(), w.end(), [&](Symbol c) { return c != a; });
  if (it == w.end()) return w;
  Text r(std::next(it), w.end());
  r.insert(r.end(), w.begin(), std::next(it));
  return r;
}

}  // namespace detail

/// Replaces the unique a-run of length `run` (which must be the longest) by
/// a^{run+1} $ a^{run}. Input is over {a, b}; output is over {$, a, b}.
inline CyclicMultiset add_terminator(const CyclicMultiset& w, std::size_t run) {
  std::vector<Text> out;
  std::size_t hits = 0;
  for (const auto& word : w.words()) {
    if (alphabet_extent(word.symbols()) > 2) throw instance_error("add_terminator expects a binary multiset");
    const Text r = detail::unwrap_runs(word.symbols(), kSymA);
    Text shifted;
    std::size_t i = 0;
    while (i < r.size()) {
      if (r[i] != kSymA) {
        shifted.push_back(static_cast<Symbol>(r[i] + 1));
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < r.size() && r[j] == kSymA) ++j;
      const std::size_t len = j - i;
      if (len > run) throw instance_error("an a-run is longer than " + std::to_string(run));
      if (len == run) {
        ++hits;
        shifted.insert(shifted.end(), run + 1, Symbol{1});
        shifted.push_back(0);
        shifted.insert(shifted.end(), run, Symbol{1});
      } else {
        shifted.insert(shifted.end(), len, Symbol{1});
      }
      i = j;
    }
    out.push_back(std::move(shifted));
  }
  if (hits != 1)
    throw instance_error("a-run of length " + std::to_string(run) + " occurs " + std::to_string(hits) + " times");
  return CyclicMultiset::from_words(out);
}

inline CyclicMultiset add_terminator(const CyclicMultiset& w, std::size_t m, std::size_t n) {
  return add_terminator(w, m + 2 * n);
}

/// Inverse direction on a single cyclic word over {$, a, b}: replaces
/// a x $ x or x $ a x (x = a^run) by x and shifts back to {a, b}.
inline std::optional<CyclicWord> remove_terminator(const CyclicWord& u, std::size_t run) {
  const Text& s = u.symbols();
  const auto dollar = std::find(s.begin(), s.end(), Symbol{0});
  if (dollar == s.end() || std::count(s.begin(), s.end(), Symbol{0}) != 1) return std::nullopt;
  // Rotate so that $ comes last and count the a's on each side.
  const std::size_t d = static_cast<std::size_t>(dollar - s.begin());
  Text r(s.begin() + static_cast<std::ptrdiff_t>(d) + 1, s.end());
  r.insert(r.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d));
  std::size_t after = 0, before = 0;
  while (after < r.size() && r[after] == 1) ++after;
  while (before < r.size() - after && r[r.size() - 1 - before] == 1) ++before;
  if (!((before == run + 1 && after == run) || (before == run && after == run + 1))) return std::nullopt;
  Text core(r.begin() + static_cast<std::ptrdiff_t>(after), r.end() - static_cast<std::ptrdiff_t>(before));
  Text w(run, kSymA);
  for (Symbol c : core) w.push_back(static_cast<Symbol>(c - 1));
  if (!is_primitive(w)) return std::nullopt;
  return CyclicWord::from_rotation(w);
}

/// Three BWT symbols of the a^run-interval, which holds exactly three
/// suffixes in a terminated multiset; rendered over "$ab".
inline std::string terminator_window(const Text& v, std::size_t run) {
  std::string out;
  const Text target(run, Symbol{1});
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (suffix_via_psi(v, i, run) == target) out += v[i] == 0 ? '$' : static_cast<char>('a' + v[i] - 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Swap cores.

enum class CoreForm {
  Partition,         // b a^k b, k in [1..m]
  BARun,             // b a^{m+2n-1}
  RunB,              // a^{m+2n-1} b
  ABA,               // a^k b a^h
  ABBA,              // a^k bb a^h
  ABABA,             // a^k b a^i b a^h, i in [1..m]
  ABBABBA,           // a^k bb a^i bb a^h, i in [1..m]
  Unclassified,
};

inline const char* core_form_name(CoreForm f) {
  switch (f) {
    case CoreForm::Partition:
      return "ba^kb";
    case CoreForm::BARun:
      return "ba^(m+2n-1)";
    case CoreForm::RunB:
      return "a^(m+2n-1)b";
    case CoreForm::ABA:
      return "a^kba^h";
    case CoreForm::ABBA:
      return "a^kbba^h";
    case CoreForm::ABABA:
      return "a^kba^iba^h";
    case CoreForm::ABBABBA:
      return "a^kbba^ibba^h";
    default:
      return "unclassified";
  }
}

struct SwapCore {
  Text core;
  SwapInterval interval;
  std::size_t occurrences = 0;
  CoreForm form = CoreForm::Unclassified;
  std::size_t k = 0;  // partition number for Partition cores
};

/// Matches `x` against the catalogue of extra cores for a multiset built
/// from m partitions and n vertices.
inline std::pair<CoreForm, std::size_t> classify_core(const Text& x, std::size_t m, std::size_t n) {
  // Run-length encode as alternating (symbol, length).
  std::vector<std::pair<Symbol, std::size_t>> runs;
  for (Symbol c : x) {
    if (!runs.empty() && runs.back().first == c) {
      ++runs.back().second;
    } else {
      runs.emplace_back(c, 1);
    }
  }
  auto is = [&](std::size_t i, Symbol c) { return runs[i].first == c; };
  const std::size_t r = runs.size();
  if (r == 3 && is(0, kSymB) && runs[0].second == 1 && runs[2].second == 1 && runs[1].second <= m) {
    return {CoreForm::Partition, runs[1].second};
  }
  if (r == 2 && is(0, kSymB) && runs[0].second == 1 && runs[1].second == m + 2 * n - 1) return {CoreForm::BARun, 0};
  if (r == 2 && is(0, kSymA) && runs[0].second == m + 2 * n - 1 && runs[1].second == 1) return {CoreForm::RunB, 0};
  if (r == 3 && is(0, kSymA)) {
    if (runs[1].second == 1) return {CoreForm::ABA, 0};
    if (runs[1].second == 2) return {CoreForm::ABBA, 0};
  }
  if (r == 5 && is(0, kSymA) && runs[2].second >= 1 && runs[2].second <= m && runs[1].second == runs[3].second) {
    if (runs[1].second == 1) return {CoreForm::ABABA, 0};
    if (runs[1].second == 2) return {CoreForm::ABBABBA, 0};
  }
  return {CoreForm::Unclassified, 0};
}

/// Every x whose x-interval is a swap interval: the interval splits at its
/// midpoint into xa- and xb-halves, the BWT halves are a^h b^h or b^h a^h,
/// and the two halves carry equal LCP subarrays. `params` = (m, n) enables
/// classification.
inline std::vector<SwapCore> list_swap_cores(const CyclicMultiset& w,
                                             std::optional<std::pair<std::size_t, std::size_t>> params = {}) {
  const SuffixArray sa = suffix_array(w);
  const LcpArray lcp = lcp_array(w, sa);
  Text v;
  v.reserve(sa.size());
  for (const auto& p : sa) {
    const auto& word = w.word(p.word);
    v.push_back(word.at_cyclic(p.offset + word.size() - 1));
  }
  std::vector<SwapCore> out;
  for (const auto& iv : enumerate_l_intervals(lcp)) {
    if (iv.ell.is_omega() || iv.hi - iv.lo < 2 || (iv.hi - iv.lo) % 2 != 0) continue;
    const std::size_t mid = (iv.lo + iv.hi) / 2;
    std::size_t splits = 0;
    for (std::size_t j = iv.lo + 1; j < iv.hi; ++j) splits += lcp[j - 1] == iv.ell;
    if (splits != 1 || lcp[mid - 1] != iv.ell) continue;
    const Symbol c1 = v[iv.lo], c2 = v[mid];
    if (c1 == c2) continue;
    bool uniform = true;
    for (std::size_t i = iv.lo; i < iv.hi && uniform; ++i) uniform = v[i] == (i < mid ? c1 : c2);
    if (!uniform) continue;
    bool same = true;
    for (std::size_t t = 1; t < mid - iv.lo && same; ++t) same = lcp[iv.lo + t - 1] == lcp[mid + t - 1];
    if (!same) continue;

    SwapCore core;
    const auto& p = sa[iv.lo];
    const auto& word = w.word(p.word);
    for (std::size_t t = 0; t < iv.ell.value(); ++t) core.core.push_back(word.at_cyclic(p.offset + t));
    core.interval = {iv.lo, iv.hi};
    core.occurrences = iv.hi - iv.lo;
    if (params) std::tie(core.form, core.k) = classify_core(core.core, params->first, params->second);
    out.push_back(std::move(core));
  }
  std::sort(out.begin(), out.end(), [](const SwapCore& a, const SwapCore& b) { return a.interval < b.interval; });
  return out;
}

/// Keeps only the listed swaps of `r`. With `base` (a member of the result's
/// BWT set) every other swap is frozen the way `base` has it; kept intervals
/// must hold their a-half first in `base`.
inline InferenceResult restrict_swaps(const InferenceResult& r, const std::vector<SwapInterval>& keep,
                                      const std::optional<Text>& base = std::nullopt) {
  InferenceResult out{base ? *base : r.bwt, {}};
  if (out.bwt.size() != r.bwt.size()) throw argument_error("base BWT length mismatch");
  for (const auto& s : r.swaps) {
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) continue;
    for (std::size_t i = s.lo; i < s.hi; ++i) {
      if (out.bwt[i] != (i < s.mid() ? kSymA : kSymB)) throw argument_error("base does not hold a kept swap unswapped");
    }
    out.swaps.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Problem-variant transforms between non-cyclic variants.

enum class Variant { BTSILA, BOSILA, TSILA, OSILA, TSSILA, OSSILA, BTSSILA, BOSSILA };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::BTSILA:
      return "BTSILA";
    case Variant::BOSILA:
      return "BOSILA";
    case Variant::TSILA:
      return "TSILA";
    case Variant::OSILA:
      return "OSILA";
    case Variant::TSSILA:
      return "TSSILA";
    case Variant::OSSILA:
      return "OSSILA";
    case Variant::BTSSILA:
      return "BTSSILA";
    default:
      return "BOSSILA";
  }
}

inline Variant parse_variant(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Variant v : {Variant::BTSILA, Variant::BOSILA, Variant::TSILA, Variant::OSILA, Variant::TSSILA, Variant::OSSILA,
                    Variant::BTSSILA, Variant::BOSSILA}) {
    if (s == variant_name(v)) return v;
  }
  throw argument_error("unknown variant '" + s + "'");
}

namespace detail {

inline std::size_t leading_zeros(const LcpArray& a) {
  std::size_t k = 0;
  while (k < a.size() && a[k] == ExtNat(0)) ++k;
  return k;
}

inline std::size_t zeros(const LcpArray& a) {
  return static_cast<std::size_t>(std::count(a.begin(), a.end(), ExtNat(0)));
}

}  // namespace detail

/// Maps an instance of `from` to an equivalent instance of `to` for the
/// seven supported pairs (either direction). nullopt means a side condition
/// fails, so the instance is a no-instance of `from`.
///
/// A terminated set of k strings has exactly k leading zeros contributed by
/// its terminators. For the set pairs `strings` is that k: terminated to
/// open strips k zeros (default: all leading zeros), open to terminated
/// prepends k zeros (default 1).
inline std::optional<LcpArray> variant_transform(const LcpArray& a, Variant from, Variant to,
                                                 std::optional<std::size_t> strings = std::nullopt) {
  using V = Variant;
  const std::size_t lead = detail::leading_zeros(a);
  const std::size_t zeros = detail::zeros(a);
  auto strip = [&](std::size_t k) -> std::optional<LcpArray> {
    if (k == 0 || k > lead) return std::nullopt;
    return LcpArray(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
  };
  auto prepend = [&](std::size_t k) {
    if (k == 0) throw argument_error("string count must be at least 1");
    LcpArray out(k, ExtNat(0));
    out.insert(out.end(), a.begin(), a.end());
    return out;
  };
  auto binary_terminated = [&]() -> std::optional<LcpArray> {
    if (lead == 0 || zeros > 2) return std::nullopt;
    return a;
  };
  auto is = [&](V x, V y) { return from == x && to == y; };

  if (is(V::BTSILA, V::BOSILA) || is(V::TSILA, V::OSILA)) return strip(1);
  if (is(V::BOSILA, V::BTSILA) || is(V::OSILA, V::TSILA)) return prepend(1);
  if (is(V::BTSILA, V::TSILA) || is(V::TSILA, V::BTSILA)) return binary_terminated();
  if (is(V::BTSILA, V::BTSSILA) || is(V::BTSSILA, V::BTSILA)) return binary_terminated();
  if (is(V::TSILA, V::TSSILA) || is(V::TSSILA, V::TSILA)) return a;
  if (is(V::TSSILA, V::OSSILA)) return strip(strings.value_or(lead));
  if (is(V::OSSILA, V::TSSILA)) return prepend(strings.value_or(1));
  if (is(V::BTSSILA, V::BOSSILA)) {
    const std::size_t k = strings.value_or(lead);
    if (k > lead || zeros - std::min(k, zeros) > 1) return std::nullopt;
    return strip(k);
  }
  if (is(V::BOSSILA, V::BTSSILA)) {
    // A binary open set has at most one zero, at the a/b boundary.
    if (zeros > 1) return std::nullopt;
    return prepend(strings.value_or(1));
  }
  throw argument_error(std::string("no reduction between ") + variant_name(from) + " and " + variant_name(to));
}

}  // namespace lcpinfer
