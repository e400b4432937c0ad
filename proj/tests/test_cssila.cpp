#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "lcpinfer/bcssila.hpp"
#include "lcpinfer/cssila.hpp"

using namespace lcpinfer;
using namespace lcpinfer::testing;

namespace {

std::vector<LcpValue> V(std::initializer_list<LcpValue> xs) { return xs; }

std::set<Text> language(const CssilaDfa& dfa) {
  const auto e = dfa.enumerate(1u << 20);
  return {e.strings.begin(), e.strings.end()};
}

void for_each_text(std::size_t n, std::size_t sigma, const std::function<void(const Text&)>& f) {
  Text t(n, 0);
  while (true) {
    f(t);
    std::size_t i = n;
    while (i > 0 && ++t[i - 1] == sigma) t[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace

TEST(CharacterArrays, Examples) {
  const auto ctx = character_arrays(L("1 0 1 0 2"), 3);
  EXPECT_EQ(ctx.per_symbol[0], V({-1, 0, -2}));
  EXPECT_EQ(ctx.per_symbol[1], V({-1, 0, -2}));
  EXPECT_EQ(ctx.per_symbol[2], V({-1, 1, -2}));

  const auto ex5 = character_arrays(L("1 4 0 2 1 3"), 2);
  EXPECT_EQ(ex5.per_symbol[0], V({-1, 0, 3, -2}));
  EXPECT_EQ(ex5.per_symbol[1], V({-1, 1, 0, 2, -2}));
  EXPECT_EQ(ex5.global.front(), -1);
  EXPECT_EQ(ex5.global.back(), -2);

  const auto tiny = character_arrays(L("0"), 2);
  EXPECT_EQ(tiny.per_symbol[0], V({-1, -2}));
  EXPECT_EQ(tiny.per_symbol[1], V({-1, -2}));

  EXPECT_THROW(character_arrays(L("1 0 1"), 3), instance_error);
  EXPECT_EQ(character_arrays(L("1 0 1")).sigma, 2u);
}

TEST(PrefixConsistency, Examples) {
  const auto ctx = character_arrays(L("1 4 0 2 1 3"), 2);
  EXPECT_TRUE(is_prefix_consistent({}, ctx));
  EXPECT_TRUE(is_prefix_consistent(T("a"), ctx));
  EXPECT_TRUE(is_prefix_consistent(T("b"), ctx));
  EXPECT_FALSE(is_prefix_consistent(T("aa"), ctx));
  EXPECT_TRUE(is_prefix_consistent(T("babbbaa"), ctx));
  EXPECT_THROW(is_prefix_consistent(T("c"), ctx), argument_error);
}

TEST(ExtendState, Examples) {
  const auto ctx5 = character_arrays(L("1 4 0 2 1 3"), 2);
  const auto a = extend_state(initial_state(ctx5), 0, ctx5);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->p, (std::vector<std::uint32_t>{1, 0}));
  EXPECT_EQ(a->b, (std::vector<std::uint8_t>{1, 0}));

  const auto ctx6 = character_arrays(L("1 0 1 0 2"), 3);
  const auto a6 = extend_state(initial_state(ctx6), 0, ctx6);
  ASSERT_TRUE(a6);
  EXPECT_FALSE(extend_state(*a6, 2, ctx6));

  // c occurs exactly twice, so a third c is rejected.
  auto s = *extend_state(initial_state(ctx6), 2, ctx6);
  s = *extend_state(s, 2, ctx6);
  EXPECT_FALSE(extend_state(s, 2, ctx6));
}

TEST(BuildDfa, BinaryArray) {
  const auto dfa = build_dfa(L("1 4 0 2 1 3"), 2);
  EXPECT_EQ(dfa.count(), 2u);
  EXPECT_EQ(language(dfa), (std::set<Text>{T("babbbaa"), T("bbabbaa")}));
  EXPECT_EQ(dfa.pruned_count(), 2u);  // v(1) and v(3)
  EXPECT_FALSE(dfa.accepts(T("ababcc")));
  EXPECT_FALSE(dfa.accepts(T("bab")));
  EXPECT_TRUE(dfa.accepts(T("bbabbaa")));
}

TEST(BuildDfa, TernaryArray) {
  const auto dfa = build_dfa(L("1 0 1 0 2"), 3);
  EXPECT_EQ(dfa_count(dfa), 8u);
  const auto e = dfa_enumerate(dfa, 100);
  EXPECT_FALSE(e.truncated);
  EXPECT_EQ(letters(e.strings), (std::vector<std::string>{"abccab", "abccba", "baccab", "baccba", "ccabab", "ccabba",
                                                          "ccbaab", "ccbaba"}));
  EXPECT_EQ(dfa.pruned_count(), 4u);  // v(6), v(7), v(11), v(14)
  for (const auto& s : e.strings) EXPECT_TRUE(dfa_accepts(dfa, s));
  const auto head = dfa_enumerate(dfa, 3);
  EXPECT_TRUE(head.truncated);
  EXPECT_EQ(letters(head.strings), (std::vector<std::string>{"abccab", "abccba", "baccab"}));
  EXPECT_THROW(dfa_enumerate(dfa, 0), argument_error);

  const auto fin = dfa.final_state();
  ASSERT_TRUE(fin);
  EXPECT_EQ(dfa.states()[*fin].p, (std::vector<std::uint32_t>{2, 2, 2}));
  EXPECT_EQ(dfa.states()[*fin].b, (std::vector<std::uint8_t>{0, 0, 0}));
}

TEST(BuildDfa, EmptyLanguage) {
  const auto dfa = build_dfa(L("2"), 1);
  EXPECT_TRUE(dfa.empty());
  EXPECT_EQ(dfa.count(), 0u);
  EXPECT_TRUE(dfa.enumerate(5).strings.empty());
  EXPECT_FALSE(dfa.accepts(T("aa")));
}

TEST(BuildDfa, DotLabelsStates) {
  const auto dot = build_dfa(L("1 4 0 2 1 3"), 2).to_dot();
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
}

// Ternary exhaustive agreement with grouping by LCP array, plus the
// reference consistency check on every prefix.
TEST(BuildDfa, MatchesExhaustiveTernaryGrouping) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::map<LcpArray, std::set<Text>> groups;
    for_each_text(n, 3, [&](const Text& t) {
      if (alphabet_extent(t) == 3 && std::count(t.begin(), t.end(), 0) && std::count(t.begin(), t.end(), 1)) {
        groups[lcp_array_of_bwt(t)].insert(t);
      }
    });
    for (const auto& [lcp, group] : groups) {
      if (count_zeros(lcp) != 2) continue;
      const auto dfa = build_dfa(lcp, 3);
      ASSERT_EQ(language(dfa), group) << lcp;
      const auto ctx = character_arrays(lcp, 3);
      for (const auto& s : group) {
        for (std::size_t k = 0; k <= n; ++k) ASSERT_TRUE(is_prefix_consistent(Text(s.begin(), s.begin() + k), ctx));
      }
      std::size_t bound = 1u << 3;
      for (auto c : ctx.counts) bound *= c + 1;
      ASSERT_LE(dfa.states().size() + dfa.pruned_count(), bound);
    }
  }
}

TEST(BuildDfa, BinaryMatchesInference) {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::set<LcpArray> seen;
    for_each_text(n, 2, [&](const Text& t) {
      const auto lcp = lcp_array_of_bwt(t);
      if (count_zeros(lcp) != 1 || !seen.insert(lcp).second) return;
      const auto r = infer(lcp);
      ASSERT_TRUE(r);
      const auto e = enumerate_bwts(*r, 1u << 20);
      ASSERT_EQ(language(build_dfa(lcp, 2)), std::set<Text>(e.bwts.begin(), e.bwts.end()));
    });
  }
}
