#pragma once

#include <string>
#include <vector>

#include "lcpinfer/cyclic.hpp"
#include "lcpinfer/ext_nat.hpp"

namespace lcpinfer::testing {

inline Text T(const std::string& s) { return from_letters(s); }
inline LcpArray L(const std::string& s) { return parse_lcp(s); }
inline CyclicMultiset W(const std::vector<std::string>& words) { return CyclicMultiset::from_letters(words); }

inline std::vector<std::string> letters(const std::vector<Text>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(to_letters(t));
  return out;
}

}  // namespace lcpinfer::testing
