#include "patience/extended.hpp"

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "patience/enumerate.hpp"

namespace patience {
namespace {

using oracle::P;
using oracle::piles;

std::vector<Card> values(const Permutation& p) { return {p.begin(), p.end()}; }

const PileConfig kExampleR = piles({{6, 4, 1}, {5, 2}, {8, 7, 3}});
const PileConfig kExampleS = piles({{4, 2, 1}, {7, 3}, {8, 6, 5}});

TEST(ExtendedPatienceSort, WorkedExample) {
  const auto pair = extended_patience_sort(P("64518723"));
  EXPECT_EQ(pair.insertion, kExampleR);
  EXPECT_EQ(pair.recording, kExampleS);
  EXPECT_EQ(shape_of(pair.insertion), shape_of(pair.recording));
}

TEST(ExtendedPatienceSort, SmallCases) {
  EXPECT_EQ(extended_patience_sort(P("1")), (StablePair{piles({{1}}), piles({{1}})}));
  EXPECT_EQ(extended_patience_sort(P("321")), (StablePair{piles({{3, 2, 1}}), piles({{3, 2, 1}})}));
  EXPECT_EQ(extended_patience_sort(P("")), (StablePair{}));
}

TEST(ExtendedPatienceSort, InsertionPilesArePatienceSort) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& s) {
      ASSERT_EQ(extended_patience_sort(s).insertion, patience_sort(s));
    });
  }
}

TEST(Reflect, FlipsEachPile) {
  EXPECT_EQ(reflect(kExampleS).piles, (RawPiles{{1, 2, 4}, {3, 7}, {5, 6, 8}}));
  EXPECT_EQ(reflect(piles({{1}})).piles, (RawPiles{{1}}));
  EXPECT_EQ(reflect(piles({{3, 2, 1}})).piles, (RawPiles{{1, 2, 3}}));
  for (const auto& s : all_pile_configs(5)) ASSERT_EQ(reflect(reflect(s)), s);
}

TEST(RpwOfReflected, ReadsPilesIncreasing) {
  EXPECT_EQ(rpw_of_reflected(kExampleS), P("12437568"));
  EXPECT_EQ(rpw_of_reflected(piles({{1}, {2}})), P("12"));
  EXPECT_EQ(rpw_of_reflected(piles({{2, 1}, {3}})), P("123"));
}

TEST(IsStablePair, Examples) {
  EXPECT_TRUE(is_stable_pair(kExampleR, kExampleS));
  // RPW(R) = 312 carries 31-2 and RPW(S') = 132 carries 13-2 at (1, 2, 3).
  EXPECT_FALSE(is_stable_pair(piles({{3, 1}, {2}}), piles({{3, 1}, {2}})));
  EXPECT_FALSE(is_stable_pair(piles({{2, 1}, {3}}), piles({{1}, {3, 2}})));
  EXPECT_TRUE(is_stable_pair(PileConfig{}, PileConfig{}));
}

TEST(IsStablePair, AgreesWithInequalityOracle) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto configs = all_pile_configs(n);
    for (const auto& r : configs) {
      for (const auto& s : configs) {
        const bool same_shape = shape_of(r) == shape_of(s);
        const bool oracle = same_shape && oracle::stable_by_inequalities(values(reverse_patience_word(r)),
                                                                          values(rpw_of_reflected(s)));
        ASSERT_EQ(is_stable_pair(r, s), oracle);
      }
    }
  }
}

TEST(IsStablePair, AcceptsEveryExtendedSortOutput) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& s) {
      const auto p = extended_patience_sort(s);
      ASSERT_TRUE(is_stable_pair(p.insertion, p.recording)) << format_permutation(s);
    });
  }
}

TEST(InvertExtended, Examples) {
  EXPECT_EQ(invert_extended(kExampleR, kExampleS), P("64518723"));
  EXPECT_EQ(invert_extended(piles({{1}}), piles({{1}})), P("1"));
  EXPECT_EQ(invert_extended(piles({{2, 1}, {3}}), piles({{2, 1}, {3}})), P("213"));
}

TEST(InvertExtended, RejectsUnstablePairs) {
  EXPECT_THROW(invert_extended(piles({{3, 1}, {2}}), piles({{3, 1}, {2}})), UnstablePairError);
  EXPECT_THROW(invert_extended(piles({{2, 1}}), piles({{1}, {2}})), UnstablePairError);
}

TEST(AssembleTwoLine, UnstablePairsDoNotRoundTrip) {
  const auto r = piles({{3, 1}, {2}});
  const auto sigma = assemble_two_line(r, r);
  EXPECT_EQ(sigma, P("321"));
  EXPECT_NE(extended_patience_sort(sigma), (StablePair{r, r}));

  std::size_t unstable = 0;
  for_each_equal_shape_pair(4, [&](const PileConfig& a, const PileConfig& b) {
    if (is_stable_pair(a, b)) return;
    ++unstable;
    EXPECT_NE(extended_patience_sort(assemble_two_line(a, b)), (StablePair{a, b}));
  });
  EXPECT_GT(unstable, 0u);
}

TEST(InvertExtended, RoundTripsExhaustively) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& s) { ASSERT_EQ(invert_extended(extended_patience_sort(s)), s); });
  }
}

TEST(StablePairs, SurjectiveOntoSymmetricGroup) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<Permutation> images;
    std::size_t count = 0;
    for_each_equal_shape_pair(n, [&](const PileConfig& r, const PileConfig& s) {
      if (!is_stable_pair(r, s)) return;
      ++count;
      const auto sigma = invert_extended(r, s);
      images.insert(sigma);
      ASSERT_EQ(extended_patience_sort(sigma), (StablePair{r, s}));
    });
    EXPECT_EQ(count, factorial(n));
    EXPECT_EQ(images.size(), count);
  }
}

TEST(StablePairs, InverseSwapsInsertionAndRecording) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& s) {
      const auto p = extended_patience_sort(s);
      const auto q = extended_patience_sort(inverse(s));
      ASSERT_EQ(q.insertion, p.recording);
      ASSERT_EQ(q.recording, p.insertion);
    });
  }
}

TEST(StablePairs, InvolutionsHaveEqualPiles) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& s) {
      const auto p = extended_patience_sort(s);
      ASSERT_EQ(s == inverse(s), p.insertion == p.recording);
    });
  }
}

}  // namespace
}  // namespace patience
