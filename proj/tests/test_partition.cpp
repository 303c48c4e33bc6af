#include <gtest/gtest.h>

#include "isoschub/partition.hpp"

using namespace isoschub;

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("3,2,1").str(), "3,2,1");
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_TRUE(Partition::parse("0").empty());
  EXPECT_EQ(Partition({4, 2, 0, 0}), Partition({4, 2}));
  EXPECT_EQ(Partition({3, 3, 1}).weight(), 7);
  EXPECT_EQ(Partition({3, 3, 1})[5], 0);
}

TEST(Partition, RejectsMalformedInput) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
}

TEST(Partition, StrictnessAndContainment) {
  EXPECT_TRUE(Partition({5, 3, 1}).is_strict());
  EXPECT_FALSE(Partition({3, 3}).is_strict());
  EXPECT_TRUE(Partition({3, 2, 1}).contains(Partition({2, 2})));
  EXPECT_FALSE(Partition({3, 1}).contains(Partition({2, 2})));
}

TEST(Partition, ConjugateIsAnInvolution) {
  EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
  for (int w = 0; w <= 9; ++w)
    for (const auto& I : partitions_of(w)) {
      EXPECT_EQ(I.conjugate().conjugate(), I);
      EXPECT_EQ(I.conjugate().weight(), w);
    }
}

TEST(Partition, EnumerationCounts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int w = 0; w < 10; ++w) EXPECT_EQ(static_cast<int>(partitions_of(w).size()), expected[w]);
  auto five = partitions_of(5);
  EXPECT_EQ(five.front(), Partition({5}));
  EXPECT_EQ(five.back(), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(partitions_of(6, 2, 3).size(), 1u);
  EXPECT_EQ(partitions_up_to(3, 2).size(), 6u);
}

TEST(Partition, Staircases) {
  EXPECT_EQ(rho(3), Partition({3, 2, 1}));
  EXPECT_TRUE(rho(0).empty());
  EXPECT_EQ(rho_complement(Partition({3, 1}), 3), Partition({2}));
  EXPECT_EQ(rho_complement(Partition(), 2), Partition({2, 1}));
  for (int k = 0; k <= 5; ++k) {
    auto subsets = strict_subsets_of_rho(k);
    EXPECT_EQ(subsets.size(), std::size_t{1} << k);
    for (const auto& I : subsets) {
      EXPECT_TRUE(I.is_strict());
      EXPECT_EQ(rho_complement(rho_complement(I, k), k), I);
      EXPECT_EQ(I.weight() + rho_complement(I, k).weight(), rho(k).weight());
    }
  }
  auto three = strict_subsets_of_rho(3);
  EXPECT_EQ(three.front(), rho(3));
  EXPECT_TRUE(three.back().empty());
}

TEST(Partition, HorizontalStrips) {
  auto strips = horizontal_strips(Partition({2, 1}), 2, 4);
  std::vector<Partition> want = {{4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}};
  EXPECT_EQ(strips, want);
  for (const auto& I : partitions_up_to(6, 4))
    for (int r = 1; r <= 3; ++r)
      for (const auto& J : horizontal_strips(I, r, 5)) {
        EXPECT_TRUE(is_horizontal_strip(I, J));
        EXPECT_EQ(J.weight(), I.weight() + r);
        EXPECT_LE(J[0], 5);
      }
  EXPECT_FALSE(is_horizontal_strip(Partition({1}), Partition({1, 1, 1})));
}

TEST(Partition, PieriMultiplicityMatchesComponentCount) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& I : strict_subsets_of_rho(k))
      for (int r = 1; r <= 4; ++r)
        for (const auto& J : horizontal_strips(I, r, 6)) {
          if (!J.is_strict()) continue;
          EXPECT_EQ(pieri_multiplicity(I, J).m, strip_components_off_first_column(I, J))
              << I.str() << " -> " << J.str();
        }
  auto pm = pieri_multiplicity(Partition({2}), Partition({3, 1}));
  EXPECT_EQ(pm.m, 1);
  EXPECT_TRUE(pm.meets_first_column);
  EXPECT_THROW(pieri_multiplicity(Partition({1}), Partition({1, 1, 1})), std::invalid_argument);
}

TEST(Partition, SortedFromUnorderedParts) {
  EXPECT_EQ(sorted_partition({1, 3, 0, 2, 3}), Partition({3, 3, 2, 1}));
}
