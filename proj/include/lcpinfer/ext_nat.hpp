#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcpinfer/errors.hpp"

namespace lcpinfer {

/// A natural number or omega, the marker for two identical cyclic suffixes.
/// Omega compares above every integer and absorbs addition.
class ExtNat {
 public:
  using value_type = std::uint64_t;

  constexpr ExtNat() = default;
  constexpr ExtNat(value_type v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if (v == kOmegaRaw) value_ = kOmegaRaw - 1;
  }

  static constexpr ExtNat omega() { return ExtNat(Raw{}, kOmegaRaw); }

  constexpr bool is_omega() const { return value_ == kOmegaRaw; }
  constexpr bool is_finite() const { return !is_omega(); }

  /// Integer value; only meaningful when finite.
  constexpr value_type value() const { return value_; }

  constexpr auto operator<=>(const ExtNat&) const = default;

  constexpr ExtNat operator+(value_type k) const {
    return is_omega() ? *this : ExtNat(value_ + k);
  }
  /// Saturating decrement; omega stays omega.
  constexpr ExtNat minus_one() const {
    return is_omega() || value_ == 0 ? *this : ExtNat(value_ - 1);
  }

  std::string to_string() const { return is_omega() ? "w" : std::to_string(value_); }

 private:
  struct Raw {};
  static constexpr value_type kOmegaRaw = std::numeric_limits<value_type>::max();
  constexpr ExtNat(Raw, value_type v) : value_(v) {}

  value_type value_ = 0;
};

inline constexpr ExtNat kOmega = ExtNat::omega();

inline std::ostream& operator<<(std::ostream& os, const ExtNat& x) { return os << x.to_string(); }

/// LCP array entries LCP[1..n) stored 0-based: entry j-1 holds LCP[j].
using LcpArray = std::vector<ExtNat>;

/// Parses whitespace-separated tokens, each a decimal integer or `w` for omega.
inline LcpArray parse_lcp(std::string_view text) {
  LcpArray out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "w" || tok == "W" || tok == "ω") {
      out.push_back(kOmega);
      continue;
    }
    if (tok.front() == '-') throw argument_error("negative LCP entry: " + tok);
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw argument_error("bad LCP token: " + tok);
    }
    if (tok.size() > 18) throw argument_error("LCP entry too large: " + tok);
    out.emplace_back(static_cast<ExtNat::value_type>(std::stoull(tok)));
  }
  return out;
}

inline std::string format_lcp(const LcpArray& lcp) {
  std::string out;
  for (std::size_t i = 0; i < lcp.size(); ++i) {
    if (i) out += ' ';
    out += lcp[i].to_string();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LcpArray& lcp) {
  return os << '[' << format_lcp(lcp) << ']';
}

}  // namespace lcpinfer
