#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcpinfer/errors.hpp"

namespace lcpinfer {

/// Alphabet index: 0 renders as 'a', 1 as 'b', and so on.
using Symbol = std::uint8_t;
using Text = std::vector<Symbol>;

inline constexpr std::size_t kMaxSigma = 26;

/// Letters 'a'..'z' to symbol indices.
inline Text from_letters(std::string_view s) {
  Text out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch < 'a' || ch > 'z') throw argument_error(std::string("not a lowercase letter: '") + ch + "'");
    out.push_back(static_cast<Symbol>(ch - 'a'));
  }
  return out;
}

inline std::string to_letters(const Text& t) {
  std::string out;
  out.reserve(t.size());
  for (Symbol c : t) out.push_back(static_cast<char>('a' + c));
  return out;
}

// Terminator contexts: '$' is symbol 0 and the letters shift up by one.

inline Text from_terminated_letters(std::string_view s) {
  Text out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '$') {
      out.push_back(0);
    } else if (ch >= 'a' && ch <= 'y') {
      out.push_back(static_cast<Symbol>(ch - 'a' + 1));
    } else {
      throw argument_error(std::string("bad symbol: '") + ch + "'");
    }
  }
  return out;
}

inline std::string to_terminated_letters(const Text& t) {
  std::string out;
  out.reserve(t.size());
  for (Symbol c : t) out.push_back(c == 0 ? '$' : static_cast<char>('a' + c - 1));
  return out;
}

inline std::size_t alphabet_extent(const Text& t) {
  std::size_t sigma = 0;
  for (Symbol c : t) sigma = std::max<std::size_t>(sigma, c + 1u);
  return sigma;
}

}  // namespace lcpinfer
