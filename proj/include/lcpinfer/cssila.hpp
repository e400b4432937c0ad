#pragma once

/**
 * @file cssila.hpp
 * @brief Cyclic string-set inference over an arbitrary alphabet.
 *
 * The set of BWTs w with LCP_{IBWT(w)} = L is recognized by an acyclic DFA
 * built left to right. A prefix s is summarized by its Parikh vector p(s)
 * and a bit vector b(s); b_c(s) records how L_c[|s|_c] compares with the
 * minimum of L after the last c in s (0: equal, 1: smaller). A prefix whose
 * summary would need "greater" has no consistent completion.
 *
 * The number of zeros in L fixes the alphabet size: sigma = zeros + 1.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcpinfer/errors.hpp"
#include "lcpinfer/ext_nat.hpp"
#include "lcpinfer/text.hpp"

namespace lcpinfer {

/// Signed LCP value with the sentinels -1 and -2 and omega as the maximum.
using LcpValue = std::int64_t;
inline constexpr LcpValue kOmegaValue = std::numeric_limits<LcpValue>::max();

inline LcpValue to_value(const ExtNat& x) {
  return x.is_omega() ? kOmegaValue : static_cast<LcpValue>(x.value());
}

/// The global array with sentinels and its per-symbol character arrays.
struct CharacterArrays {
  std::size_t sigma = 0;
  std::size_t n = 0;
  std::vector<LcpValue> global;              // L[0..n], L[0] = -1, L[n] = -2
  std::vector<std::size_t> interval_start;   // i_c
  std::vector<std::size_t> counts;           // |L|_c = j_c - i_c
  std::vector<std::vector<LcpValue>> per_symbol;  // L_c[0..|L|_c]

  LcpValue at(std::size_t j) const { return global[j]; }
};

inline std::size_t count_zeros(const LcpArray& lcp) {
  return static_cast<std::size_t>(std::count(lcp.begin(), lcp.end(), ExtNat(0)));
}

/// Splits `lcp` at its zeros. `sigma` of 0 means "infer from the zero count".
inline CharacterArrays character_arrays(const LcpArray& lcp, std::size_t sigma = 0) {
  const std::size_t zeros = count_zeros(lcp);
  if (sigma == 0) sigma = zeros + 1;
  if (zeros + 1 != sigma) {
    throw instance_error("LCP array has " + std::to_string(zeros) + " zeros; sigma " + std::to_string(sigma) +
                         " needs " + std::to_string(sigma - 1));
  }
  if (sigma > kMaxSigma) throw instance_error("alphabet larger than " + std::to_string(kMaxSigma));

  CharacterArrays ctx;
  ctx.sigma = sigma;
  ctx.n = lcp.size() + 1;
  ctx.global.reserve(ctx.n + 1);
  ctx.global.push_back(-1);
  for (const auto& x : lcp) ctx.global.push_back(to_value(x));
  ctx.global.push_back(-2);

  ctx.interval_start.push_back(0);
  for (std::size_t j = 1; j < ctx.n; ++j) {
    if (ctx.global[j] == 0) ctx.interval_start.push_back(j);
  }
  for (std::size_t c = 0; c < sigma; ++c) {
    const std::size_t lo = ctx.interval_start[c];
    const std::size_t hi = c + 1 < sigma ? ctx.interval_start[c + 1] : ctx.n;
    ctx.counts.push_back(hi - lo);
    std::vector<LcpValue> arr{-1};
    for (std::size_t j = lo + 1; j < hi; ++j) {
      const LcpValue v = ctx.global[j];
      arr.push_back(v == kOmegaValue ? v : v - 1);
    }
    arr.push_back(-2);
    ctx.per_symbol.push_back(std::move(arr));
  }
  return ctx;
}

namespace detail {

inline LcpValue plus_one(LcpValue v) { return v == kOmegaValue ? v : v + 1; }

}  // namespace detail

/// Reference check of prefix consistency, straight from the pair and
/// partial-pair constraints. Quadratic; meant as an oracle.
inline bool is_prefix_consistent(const Text& s, const CharacterArrays& ctx) {
  const std::size_t k = s.size();
  if (k > ctx.n) return false;
  std::vector<std::size_t> seen(ctx.sigma, 0);
  std::vector<std::ptrdiff_t> last(ctx.sigma, -1);
  for (std::size_t pos = 0; pos < k; ++pos) {
    const Symbol c = s[pos];
    if (c >= ctx.sigma) throw argument_error("symbol outside the alphabet");
    if (seen[c] == ctx.counts[c]) return false;
    if (seen[c] > 0) {
      // Pair (last[c], pos) of the seen[c]-th and (seen[c]+1)-th occurrences.
      LcpValue mn = kOmegaValue;
      for (std::size_t j = static_cast<std::size_t>(last[c]) + 1; j <= pos; ++j) mn = std::min(mn, ctx.at(j));
      if (ctx.at(ctx.interval_start[c] + seen[c]) != detail::plus_one(mn)) return false;
    }
    ++seen[c];
    last[c] = static_cast<std::ptrdiff_t>(pos);
  }
  for (std::size_t c = 0; c < ctx.sigma; ++c) {
    if (seen[c] >= ctx.counts[c]) continue;
    LcpValue mn = kOmegaValue;
    for (std::size_t j = static_cast<std::size_t>(last[c] + 1); j <= k; ++j) mn = std::min(mn, ctx.at(j));
    if (ctx.at(ctx.interval_start[c] + seen[c]) > detail::plus_one(mn)) return false;
  }
  return true;
}

/// Automaton state: Parikh vector and bit vector of the prefixes it stands for.
struct DfaState {
  std::vector<std::uint32_t> p;
  std::vector<std::uint8_t> b;

  std::size_t depth() const {
    std::size_t d = 0;
    for (auto x : p) d += x;
    return d;
  }
  friend auto operator<=>(const DfaState&, const DfaState&) = default;
};

inline DfaState initial_state(const CharacterArrays& ctx) {
  return {std::vector<std::uint32_t>(ctx.sigma, 0), std::vector<std::uint8_t>(ctx.sigma, 0)};
}

/// State reached by appending `c`, or nullopt when the extended prefix is
/// inconsistent (a pair constraint fails or some b entry would be -1).
inline std::optional<DfaState> extend_state(const DfaState& state, Symbol c, const CharacterArrays& ctx) {
  if (c >= ctx.sigma) return std::nullopt;
  if (state.p[c] >= ctx.counts[c]) return std::nullopt;
  // Closing the pair formed by the previous c and this one.
  if (state.b[c] != 0) return std::nullopt;
  const LcpValue next = ctx.at(state.depth() + 1);

  DfaState out = state;
  for (std::size_t d = 0; d < ctx.sigma; ++d) {
    const bool self = d == c;
    const LcpValue lhs = ctx.per_symbol[d][state.p[d] + (self ? 1 : 0)];
    if (lhs > next) return std::nullopt;
    if (lhs == next) {
      out.b[d] = 0;
    } else if (self) {
      out.b[d] = 1;
    }
  }
  ++out.p[c];
  return out;
}

/// Layered acyclic DFA recognizing every w with LCP_{IBWT(w)} = L.
class CssilaDfa {
 public:
  static constexpr std::int32_t kNone = -1;

  struct Transition {
    std::size_t from;
    Symbol label;
    std::size_t to;
  };

  std::size_t sigma() const { return sigma_; }
  std::size_t length() const { return n_; }
  const std::vector<DfaState>& states() const { return states_; }
  /// Live states per depth after pruning.
  const std::vector<std::vector<std::size_t>>& layers() const { return layers_; }
  std::size_t pruned_count() const { return pruned_; }
  std::size_t initial() const { return 0; }
  /// Accepting state id; absent when the language is empty.
  std::optional<std::size_t> final_state() const { return final_; }
  bool empty() const { return !final_.has_value(); }

  std::int32_t next(std::size_t state, Symbol c) const {
    return c < sigma_ ? delta_[state * sigma_ + c] : kNone;
  }

  std::vector<Transition> transitions() const {
    std::vector<Transition> out;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      for (std::size_t c = 0; c < sigma_; ++c) {
        const auto t = delta_[s * sigma_ + c];
        if (t != kNone) out.push_back({s, static_cast<Symbol>(c), static_cast<std::size_t>(t)});
      }
    }
    return out;
  }

  bool accepts(const Text& s) const {
    if (empty() || s.size() != n_) return false;
    std::int32_t cur = 0;
    for (Symbol c : s) {
      cur = next(static_cast<std::size_t>(cur), c);
      if (cur == kNone) return false;
    }
    return static_cast<std::size_t>(cur) == *final_;
  }

  /// Number of accepted strings, saturating at UINT64_MAX.
  std::uint64_t count() const {
    if (empty()) return 0;
    std::vector<std::uint64_t> ways(states_.size(), 0);
    ways[*final_] = 1;
    for (std::size_t d = n_; d-- > 0;) {
      for (std::size_t s : layers_[d]) {
        std::uint64_t total = 0;
        for (std::size_t c = 0; c < sigma_; ++c) {
          const auto t = delta_[s * sigma_ + c];
          if (t == kNone) continue;
          const std::uint64_t w = ways[static_cast<std::size_t>(t)];
          total = total > std::numeric_limits<std::uint64_t>::max() - w ? std::numeric_limits<std::uint64_t>::max()
                                                                        : total + w;
        }
        ways[s] = total;
      }
    }
    return ways[0];
  }

  struct Enumeration {
    std::vector<Text> strings;
    bool truncated = false;
  };

  /// Accepted strings in lexicographic order, at most `limit` of them.
  Enumeration enumerate(std::size_t limit) const {
    if (limit == 0) throw argument_error("limit must be at least 1");
    Enumeration out;
    if (empty()) return out;
    Text prefix;
    enumerate_from(0, prefix, limit, out);
    return out;
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph cssila {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t s = 0; s < states_.size(); ++s) {
      os << "  s" << s << " [label=\"" << label(states_[s]) << "\"";
      if (final_ && s == *final_) os << ", peripheries=2";
      os << "];\n";
    }
    for (const auto& t : transitions()) {
      os << "  s" << t.from << " -> s" << t.to << " [label=\"" << static_cast<char>('a' + t.label) << "\"];\n";
    }
    for (const auto& layer : layers_) {
      if (layer.empty()) continue;
      os << "  { rank=same;";
      for (std::size_t s : layer) os << " s" << s << ";";
      os << " }\n";
    }
    os << "}\n";
    return os.str();
  }

  static std::string label(const DfaState& st) {
    std::string out;
    for (std::size_t i = 0; i < st.p.size(); ++i) out += (i ? "," : "") + std::to_string(st.p[i]);
    out += '|';
    for (std::size_t i = 0; i < st.b.size(); ++i) out += (i ? "," : "") + std::to_string(st.b[i]);
    return out;
  }

 private:
  friend CssilaDfa build_dfa(const CharacterArrays& ctx);

  void enumerate_from(std::size_t s, Text& prefix, std::size_t limit, Enumeration& out) const {
    if (out.truncated) return;
    if (prefix.size() == n_) {
      if (out.strings.size() == limit) {
        out.truncated = true;
        return;
      }
      out.strings.push_back(prefix);
      return;
    }
    for (std::size_t c = 0; c < sigma_; ++c) {
      const auto t = delta_[s * sigma_ + c];
      if (t == kNone) continue;
      prefix.push_back(static_cast<Symbol>(c));
      enumerate_from(static_cast<std::size_t>(t), prefix, limit, out);
      prefix.pop_back();
      if (out.truncated) return;
    }
  }

  std::size_t sigma_ = 0;
  std::size_t n_ = 0;
  std::vector<DfaState> states_;
  std::vector<std::int32_t> delta_;
  std::vector<std::vector<std::size_t>> layers_;
  std::optional<std::size_t> final_;
  std::size_t pruned_ = 0;
};

namespace detail {

struct StateKeyHash {
  std::size_t operator()(const DfaState& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : s.p) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    for (auto x : s.b) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace detail

/// Forward sweep over depths 0..n, then backward pruning from the unique
/// final state (p(L), 0...0).
inline CssilaDfa build_dfa(const CharacterArrays& ctx) {
  const std::size_t sigma = ctx.sigma;
  const std::size_t n = ctx.n;

  std::vector<DfaState> states{initial_state(ctx)};
  std::vector<std::int32_t> delta(sigma, CssilaDfa::kNone);
  std::vector<std::vector<std::size_t>> layers(n + 1);
  layers[0].push_back(0);

  for (std::size_t d = 0; d < n; ++d) {
    std::unordered_map<DfaState, std::size_t, detail::StateKeyHash> index;
    for (std::size_t s : layers[d]) {
      for (std::size_t c = 0; c < sigma; ++c) {
        auto next = extend_state(states[s], static_cast<Symbol>(c), ctx);
        if (!next) continue;
        auto [it, inserted] = index.try_emplace(*next, states.size());
        if (inserted) {
          states.push_back(std::move(*next));
          delta.resize(states.size() * sigma, CssilaDfa::kNone);
          layers[d + 1].push_back(it->second);
        }
        delta[s * sigma + c] = static_cast<std::int32_t>(it->second);
      }
    }
  }

  DfaState want_final{std::vector<std::uint32_t>(ctx.counts.begin(), ctx.counts.end()),
                      std::vector<std::uint8_t>(sigma, 0)};
  std::optional<std::size_t> final_id;
  for (std::size_t s : layers[n]) {
    if (states[s] == want_final) final_id = s;
  }

  // Backward reachability from the final state.
  std::vector<bool> live(states.size(), false);
  if (final_id) live[*final_id] = true;
  for (std::size_t d = n; d-- > 0;) {
    for (std::size_t s : layers[d]) {
      for (std::size_t c = 0; c < sigma; ++c) {
        const auto t = delta[s * sigma + c];
        if (t != CssilaDfa::kNone && live[static_cast<std::size_t>(t)]) live[s] = true;
      }
    }
  }

  CssilaDfa dfa;
  dfa.sigma_ = sigma;
  dfa.n_ = n;
  dfa.layers_.resize(n + 1);
  std::vector<std::int32_t> remap(states.size(), CssilaDfa::kNone);
  // Keep the initial state even when the language is empty so that the
  // automaton always has a start.
  for (std::size_t d = 0; d <= n; ++d) {
    for (std::size_t s : layers[d]) {
      if (!live[s] && s != 0) continue;
      remap[s] = static_cast<std::int32_t>(dfa.states_.size());
      dfa.layers_[d].push_back(dfa.states_.size());
      dfa.states_.push_back(states[s]);
    }
  }
  dfa.pruned_ = states.size() - dfa.states_.size();
  dfa.delta_.assign(dfa.states_.size() * sigma, CssilaDfa::kNone);
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (remap[s] == CssilaDfa::kNone || !live[s]) continue;
    for (std::size_t c = 0; c < sigma; ++c) {
      const auto t = delta[s * sigma + c];
      if (t != CssilaDfa::kNone && live[static_cast<std::size_t>(t)]) {
        dfa.delta_[static_cast<std::size_t>(remap[s]) * sigma + c] = remap[static_cast<std::size_t>(t)];
      }
    }
  }
  if (final_id) dfa.final_ = static_cast<std::size_t>(remap[*final_id]);
  if (!final_id) {
    dfa.layers_[0].clear();
    dfa.layers_[0].push_back(0);
  }
  return dfa;
}

inline CssilaDfa build_dfa(const LcpArray& lcp, std::size_t sigma = 0) {
  return build_dfa(character_arrays(lcp, sigma));
}

inline std::uint64_t dfa_count(const CssilaDfa& dfa) { return dfa.count(); }
inline bool dfa_accepts(const CssilaDfa& dfa, const Text& s) { return dfa.accepts(s); }
inline CssilaDfa::Enumeration dfa_enumerate(const CssilaDfa& dfa, std::size_t limit) { return dfa.enumerate(limit); }

}  // namespace lcpinfer
