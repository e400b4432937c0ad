#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "lcpinfer/cyclic.hpp"

using namespace lcpinfer;
using namespace lcpinfer::testing;

TEST(StandardPermutation, StableSortOfBbaabaaa) {
  EXPECT_EQ(standard_permutation(T("bbaabaaa")), (Psi{2, 3, 5, 6, 7, 0, 1, 4}));
  EXPECT_EQ(standard_permutation(T("a")), (Psi{0}));
  EXPECT_EQ(standard_permutation(T("ba")), (Psi{1, 0}));
  EXPECT_THROW(standard_permutation(Text{}), argument_error);
}

TEST(Ibwt, CyclesOfPsi) {
  EXPECT_EQ(ibwt(T("bbaabaaa")), W({"aab", "aab", "ab"}));
  EXPECT_EQ(ibwt(T("aa")), W({"a", "a"}));
  EXPECT_EQ(ibwt(T("babbbaa")), W({"abb", "aabb"}));
  const auto one = ibwt(T("bbabbaa"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(to_letters(one.word(1).symbols()), "aabbabb");
}

TEST(Bwt, InvertsIbwt) {
  EXPECT_EQ(to_letters(bwt(W({"ab", "aab", "aab"}))), "bbaabaaa");
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Text v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i) & 1u;
      const auto w = ibwt(v);
      ASSERT_EQ(bwt(w), v);
      ASSERT_EQ(w.total_length(), n);
    }
  }
}

TEST(CanonicalRotation, LeastRotationAndPrimitivity) {
  EXPECT_EQ(to_letters(canonical_rotation(T("baa")).symbols()), "aab");
  EXPECT_EQ(to_letters(canonical_rotation(T("a")).symbols()), "a");
  EXPECT_THROW(canonical_rotation(T("abab")), validation_error);
  EXPECT_THROW(canonical_rotation(Text{}), validation_error);
}

TEST(CompareCyclicSuffixes, Examples) {
  const auto abab = W({"ab", "ab"});
  EXPECT_EQ(compare_cyclic_suffixes(abab, {1, 0}, {2, 0}), std::weak_ordering::equivalent);
  const auto aab = W({"aab"});
  EXPECT_EQ(compare_cyclic_suffixes(aab, {1, 1}, {1, 1}), std::weak_ordering::equivalent);
  EXPECT_EQ(compare_cyclic_suffixes(aab, {1, 0}, {1, 1}), std::weak_ordering::less);
  EXPECT_THROW(compare_cyclic_suffixes(aab, {1, 3}, {1, 0}), argument_error);
  EXPECT_THROW(compare_cyclic_suffixes(aab, {2, 0}, {1, 0}), argument_error);
}

TEST(LcpOfPair, Examples) {
  const auto w = W({"ab", "aab", "aab"});
  EXPECT_EQ(lcp_of_pair(w, {2, 0}, {3, 0}), kOmega);
  EXPECT_EQ(lcp_of_pair(w, {1, 0}, {1, 1}), ExtNat(0));
  // (aba)^w from aab at offset 1 against (ab)^w
  EXPECT_EQ(lcp_of_pair(w, {2, 1}, {1, 0}), ExtNat(3));
}

TEST(SuffixArray, ThreeWordMultiset) {
  const auto w = W({"ab", "aab", "aab"});
  const SuffixArray expected{{2, 0}, {3, 0}, {2, 1}, {3, 1}, {1, 0}, {2, 2}, {3, 2}, {1, 1}};
  EXPECT_EQ(suffix_array(w), expected);
  EXPECT_EQ(lcp_array(w), L("w 1 w 3 0 w 2"));
  EXPECT_EQ(suffix_array(W({"a"})), (SuffixArray{{1, 0}}));
  EXPECT_EQ(suffix_array(W({"b", "a"})), (SuffixArray{{1, 0}, {2, 0}}));
  EXPECT_THROW(suffix_array(CyclicMultiset{}), argument_error);
}

TEST(LcpArray, Examples) {
  EXPECT_EQ(lcp_array(W({"aababa"})), L("2 1 3 0 2"));
  EXPECT_EQ(lcp_array(W({"a", "a"})), L("w"));
  EXPECT_EQ(lcp_array(W({"ab", "ab"})), L("w 0 w"));
}

TEST(SuffixViaPsi, SpellsSortedSuffixes) {
  EXPECT_EQ(to_letters(suffix_via_psi(T("bbaabaaa"), 0, 3)), "aab");
  EXPECT_EQ(to_letters(suffix_via_psi(T("bbaabaaa"), 4, 2)), "ab");
  EXPECT_TRUE(suffix_via_psi(T("bbaabaaa"), 2, 0).empty());
}

TEST(SuffixViaPsi, MatchesSuffixArrayOrder) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    Text v(n);
    for (auto& c : v) c = static_cast<Symbol>(rng() % 3);
    const auto w = ibwt(v);
    const auto sa = suffix_array(w);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& word = w.word(sa[i].word);
      Text direct;
      for (std::size_t k = 0; k < 2 * n; ++k) direct.push_back(word.at_cyclic(sa[i].offset + k));
      ASSERT_EQ(suffix_via_psi(v, i, 2 * n), direct);
    }
  }
}

TEST(LcpArray, MatchesPairwiseRecomputationAndBwtShortcut) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    Text v(n);
    for (auto& c : v) c = static_cast<Symbol>(rng() % 2);
    const auto w = ibwt(v);
    const auto sa = suffix_array(w);
    const auto lcp = lcp_array(w, sa);
    ASSERT_EQ(lcp.size(), n - 1);
    for (std::size_t j = 1; j < n; ++j) {
      ASSERT_EQ(lcp[j - 1], lcp_of_pair(w, sa[j - 1], sa[j]));
      ASSERT_NE(compare_cyclic_suffixes(w, sa[j - 1], sa[j]), std::weak_ordering::greater);
    }
    ASSERT_EQ(lcp_array_of_bwt(v), lcp);
  }
}
