#include <gtest/gtest.h>

#include "hecke_stab/partitions.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace hecke_stab;

TEST(Partition, Basics) {
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_EQ(Partition({2, 1, 0}).parts(), std::vector<int>({2, 1}));
  EXPECT_EQ(Partition::parse("2,1"), Partition({2, 1}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition().first(), 0);
  EXPECT_EQ(Partition().size(), 0);
  EXPECT_THROW(Partition::parse("2,x"), Error);
}

TEST(Partition, EnumerationMatchesOracle) {
  for (int n = 0; n <= 9; ++n) {
    std::vector<std::vector<int>> got;
    for (const auto& p : partitions_of(n)) got.push_back(p.parts());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::partitions(n));
    if (n > 0) {
      EXPECT_EQ(partitions_of(n).front(), Partition({n}));
    }
  }
}

TEST(Pad, Examples) {
  EXPECT_EQ(pad(Partition(), 5), Partition({5}));
  EXPECT_EQ(pad(Partition({2, 1}), 6), Partition({3, 2, 1}));
  try {
    (void)pad(Partition({2}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.tag(), "pad range");
  }
  EXPECT_EQ(unpad(Partition({5})), Partition());
  EXPECT_EQ(unpad(Partition({3, 2, 1})), Partition({2, 1}));
  EXPECT_EQ(unpad(Partition()), Partition());
}

TEST(Pad, RoundTrip) {
  for (int k = 0; k <= 5; ++k)
    for (const auto& l : partitions_of(k))
      for (int n = 0; n <= 12; ++n) {
        if (n >= l.size() + l.first()) {
          EXPECT_EQ(unpad(pad(l, n)), l);
          EXPECT_EQ(pad(l, n).size(), n);
        } else {
          EXPECT_THROW(pad(l, n), Error);
        }
      }
}

TEST(Pieri, Examples) {
  EXPECT_EQ(pieri_add(Partition({1}), 2), (std::vector<Partition>{Partition({3}), Partition({2, 1})}));
  EXPECT_EQ(pieri_add(Partition({2, 1}), 0), std::vector<Partition>{Partition({2, 1})});
  EXPECT_EQ(pieri_add(Partition({1, 1}), 1), (std::vector<Partition>{Partition({2, 1}), Partition({1, 1, 1})}));
}

TEST(Pieri, MatchesHorizontalStripOracle) {
  for (int k = 0; k <= 5; ++k)
    for (const auto& l : partitions_of(k))
      for (int m = 0; m <= 4; ++m) {
        std::vector<std::vector<int>> expected;
        for (const auto& mu : oracle::partitions(k + m))
          if (oracle::horizontal_strip(l.parts(), mu)) expected.push_back(mu);
        std::vector<std::vector<int>> got;
        for (const auto& mu : pieri_add(l, m)) got.push_back(mu.parts());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);
        // Induced dimension identity.
        mpz_class sum = 0;
        for (const auto& mu : pieri_add(l, m)) sum += syt_count(mu);
        EXPECT_EQ(sum, binomial(k + m, m) * syt_count(l));
      }
}

TEST(Tableaux, HookLengthMatchesBruteForce) {
  EXPECT_EQ(syt_count(Partition({4})), 1);
  EXPECT_EQ(syt_count(Partition({2, 1})), 2);
  EXPECT_EQ(syt_count(Partition({2, 2})), 2);
  for (int n = 0; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      EXPECT_EQ(syt_count(l), oracle::brute_syt(l.parts()));
      const auto ts = syt_enumerate(l);
      EXPECT_EQ(ts.size(), syt_count(l));
      std::set<Tableau> distinct(ts.begin(), ts.end());
      EXPECT_EQ(distinct.size(), ts.size());
    }
}

TEST(Tableaux, EnumerationOrderAndBound) {
  const auto ts = syt_enumerate(Partition({2, 1}));
  ASSERT_EQ(ts.size(), 2u);
  // Largest letter removed from the top corner first.
  EXPECT_EQ(ts[0].rows, (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_EQ(ts[1].rows, (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(syt_enumerate(Partition({1, 1, 1})).size(), 1u);
  try {
    (void)syt_enumerate(Partition({9}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.tag(), "size bound");
  }
}

TEST(RowStandard, Examples) {
  EXPECT_EQ(row_standard_tableaux(Composition({4}), Composition({4})).size(), 1u);
  EXPECT_EQ(row_standard_tableaux(Composition({2, 1}), Composition({2, 1})).size(), 2u);
  EXPECT_EQ(row_standard_tableaux(Composition({1, 1}), Composition({1, 1})).size(), 2u);
  EXPECT_THROW(row_standard_tableaux(Composition({2}), Composition({1})), Error);
}

TEST(StableOracle, Examples) {
  EXPECT_EQ(stable_multiplicity_oracle(Partition({1}), 4),
            (std::map<Partition, int>{{Partition({4}), 1}, {Partition({3, 1}), 1}}));
  EXPECT_EQ(stable_multiplicity_oracle(Partition(), 5), (std::map<Partition, int>{{Partition({5}), 1}}));
  const auto six = stable_multiplicity_oracle(Partition({2, 1}), 6);
  EXPECT_EQ(six.size(), pieri_add(Partition({2, 1}), 3).size());
  EXPECT_TRUE(six.count(Partition({5, 1})));
  EXPECT_TRUE(six.count(Partition({3, 2, 1})));
  EXPECT_THROW(stable_multiplicity_oracle(Partition({2, 1}), 2), Error);
}
